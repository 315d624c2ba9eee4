//! Exact scalars: arbitrary-precision rationals and prime fields.
//!
//! Every value in this crate is a linear-algebraic object over a single
//! ground field fixed per session. Arithmetic is exact and equality is
//! decidable; there is no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The ground field of a session: the rationals, or the prime field F_p.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u64),
}

impl FieldSpec {
    /// Parses the CLI/file spelling: `q` for the rationals, `fp:P` for F_P.
    pub fn parse(s: &str) -> Result<Self, Error> {
        if s == "q" || s == "Q" {
            return Ok(FieldSpec::Rationals);
        }
        if let Some(p) = s.strip_prefix("fp:") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Malformed(format!("bad field spec `{s}`")))?;
            if !is_prime(p) {
                return Err(Error::Malformed(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Malformed(format!(
            "bad field spec `{s}` (expected `q` or `fp:P`)"
        )))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::Prime(p) => Scalar::Fp { value: 0, modulus: *p },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::Prime(p) => Scalar::Fp { value: 1 % p, modulus: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp { value: r, modulus: *p }
            }
        }
    }

    /// Parses a scalar string: `a`, `-a`, or `a/b`. Over F_p the value is
    /// reduced to its canonical representative in `0..p`.
    pub fn scalar_from_str(&self, s: &str) -> Result<Scalar, Error> {
        let bad = || Error::Malformed(format!("bad scalar `{s}`"));
        let (num, den) = match s.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (s.trim(), None),
        };
        let n = BigInt::from_str(num).map_err(|_| bad())?;
        let d = match den {
            Some(b) => BigInt::from_str(b).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if d.is_zero() {
            return Err(bad());
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Q(BigRational::new(n, d))),
            FieldSpec::Prime(p) => {
                let pv = BigInt::from(*p);
                let nm = ((n % &pv) + &pv) % &pv;
                let dm = ((d % &pv) + &pv) % &pv;
                let nv: u64 = nm.try_into().unwrap();
                let dv: u64 = dm.try_into().unwrap();
                if dv == 0 {
                    return Err(Error::Malformed(format!(
                        "scalar `{s}` has denominator divisible by {p}"
                    )));
                }
                let inv = fp_inv(dv, *p);
                Ok(Scalar::Fp { value: mulmod(nv, inv, *p), modulus: *p })
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "fp:{p}"),
        }
    }
}

/// An exact field element. Carries its field so mixed-field arithmetic is
/// caught immediately rather than producing garbage.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Q(_) => FieldSpec::Rationals,
            Scalar::Fp { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a + b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: addmod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a * b),
            (Scalar::Fp { value: a, modulus: p }, Scalar::Fp { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { value: mulmod(*a, *b, *p), modulus: *p }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Q(a) => Scalar::Q(a.recip()),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: fp_inv(*value, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv().expect("division by zero"))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else if r.denom().is_negative() {
                    // BigRational keeps the denominator positive, but guard anyway.
                    write!(f, "{}/{}", -r.numer(), -r.denom())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    acc
}

fn fp_inv(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    powmod(a, p - 2, p)
}

/// Trial-division primality test; inputs are desk-scale moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldSpec = FieldSpec::Rationals;
    const F3: FieldSpec = FieldSpec::Prime(3);

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Q.scalar_from_str("1/3").unwrap();
        let b = Q.scalar_from_str("1/6").unwrap();
        assert_eq!(a.add(&b), Q.scalar_from_str("1/2").unwrap());
        assert_eq!(a.mul(&b).to_string(), "1/18");
        assert_eq!(a.sub(&a), Q.zero());
        assert_eq!(a.div(&b).to_string(), "2");
    }

    #[test]
    fn prime_field_arithmetic() {
        let two = F3.from_i64(2);
        assert_eq!(two.mul(&two), F3.one());
        assert_eq!(two.add(&F3.one()), F3.zero());
        assert_eq!(two.inv().unwrap(), two);
        assert_eq!(F3.from_i64(-1), two);
        assert_eq!(F3.scalar_from_str("1/2").unwrap(), two);
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!(FieldSpec::parse("q").unwrap(), Q);
        assert_eq!(FieldSpec::parse("fp:7").unwrap(), FieldSpec::Prime(7));
        assert!(FieldSpec::parse("fp:6").is_err());
        assert!(FieldSpec::parse("r").is_err());
    }

    #[test]
    fn canonical_display_roundtrips() {
        for s in ["0", "7", "-3/4", "22/7"] {
            let v = Q.scalar_from_str(s).unwrap();
            assert_eq!(Q.scalar_from_str(&v.to_string()).unwrap(), v);
        }
        let v = F3.scalar_from_str("-1").unwrap();
        assert_eq!(v.to_string(), "2");
    }

    #[test]
    fn division_by_p_rejected_over_fp() {
        assert!(F3.scalar_from_str("1/3").is_err());
    }
}
