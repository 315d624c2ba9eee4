//! Dense exact matrices and deterministic echelon computations.
//!
//! Every derived basis in the crate (subspace bases, quotient bases,
//! balanced tensor products) comes from reduced row echelon form with
//! first-available pivots, which makes all outputs byte-deterministic.

use std::fmt;

use crate::field::{FieldSpec, Scalar};

/// A dense matrix of exact scalars, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub field: FieldSpec,
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat { field, rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m[(i, i)] = field.one();
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { field, rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { field, rows, cols, data }
    }

    /// Column vector from a slice.
    pub fn col_vec(field: FieldSpec, v: &[Scalar]) -> Self {
        Mat { field, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        assert_eq!(self.field, other.field);
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].add(&a.mul(b));
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].add(&other[(i, j)]))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].sub(&other[(i, j)]))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self[(i, j)].mul(c))
    }

    /// Applies the matrix to a coordinate vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "shape mismatch in apply");
        let mut out = vec![self.field.zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] = out[i].add(&a.mul(x));
                }
            }
        }
        out
    }

    /// Horizontal concatenation.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols { self[(i, j)].clone() } else { other[(i, j - self.cols)].clone() }
        })
    }

    /// Reduced row echelon form with first-available pivots: for each column
    /// left to right, the first row (top to bottom) with a nonzero entry at
    /// or below the cursor becomes the pivot row.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = m[(r, c)].inv().unwrap();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let factor = m[(i, c)].clone();
                    for j in c..m.cols {
                        let t = m[(r, j)].mul(&factor);
                        m[(i, j)] = m[(i, j)].sub(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { mat: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Solves `self * X = B` exactly. Returns `None` when inconsistent.
    /// Free variables (non-pivot columns) are set to zero, so the solution
    /// is deterministic; it is unique when `self` has full column rank.
    pub fn solve(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, b.rows, "shape mismatch in solve");
        let aug = self.hcat(b).rref();
        // Any pivot in the appended block marks an inconsistent system.
        if aug.pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.field, self.cols, b.cols);
        for (r, &c) in aug.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(c, j)] = aug.mat[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Exact inverse of a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let x = self.solve(&Mat::identity(self.field, self.rows))?;
        if self.mul(&x) == Mat::identity(self.field, self.rows) {
            Some(x)
        } else {
            None
        }
    }

    /// Indices of the pivot columns of the matrix: the lexicographically
    /// first subset of columns forming a basis of the column space.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|s| s.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Rref {
    pub mat: Mat,
    pub pivots: Vec<usize>,
}

/// A quotient of a coordinate space by the span of a list of vectors, with
/// a canonical basis: the classes of the non-pivot coordinates.
///
/// `projection` maps ambient coordinates onto quotient coordinates, and
/// `representatives` lists, for each quotient basis vector, the ambient
/// coordinate whose class it is (a canonical lift).
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub field: FieldSpec,
    pub ambient_dim: usize,
    pub dim: usize,
    pub projection: Mat,
    pub representatives: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(field: FieldSpec, ambient_dim: usize, spanning: &[Vec<Scalar>]) -> Self {
        for v in spanning {
            assert_eq!(v.len(), ambient_dim, "spanning vector has wrong length");
        }
        let rows: Vec<Vec<Scalar>> = spanning.to_vec();
        let reduced = Mat::from_rows(field, rows).rref();
        let pivots = &reduced.pivots;
        let representatives: Vec<usize> =
            (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
        let dim = representatives.len();
        let class_of = |c: usize| representatives.iter().position(|&r| r == c);
        let mut projection = Mat::zeros(field, dim, ambient_dim);
        for c in 0..ambient_dim {
            if let Some(k) = class_of(c) {
                projection[(k, c)] = field.one();
            } else {
                // Pivot coordinate: its class is determined by the rref row
                // e_c + sum(coef * e_j) in span  =>  [e_c] = -sum(coef * [e_j]).
                let r = pivots.iter().position(|&p| p == c).unwrap();
                for (k, &j) in representatives.iter().enumerate() {
                    let coef = &reduced.mat[(r, j)];
                    if !coef.is_zero() {
                        projection[(k, c)] = coef.neg();
                    }
                }
            }
        }
        QuotientSpace { field, ambient_dim, dim, projection, representatives }
    }

    /// Projects an ambient vector to quotient coordinates.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.projection.apply(v)
    }

    /// The canonical ambient lift of quotient basis vector `k`.
    pub fn lift_basis(&self, k: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.ambient_dim];
        v[self.representatives[k]] = self.field.one();
        v
    }
}

/// The column-space basis of a matrix: its pivot columns, in order.
/// Returns the basis as a matrix whose columns are the chosen vectors,
/// together with the pivot column indices.
pub fn column_space_basis(m: &Mat) -> (Mat, Vec<usize>) {
    let pivots = m.rref().pivots;
    let basis = Mat::from_fn(m.field, m.rows, pivots.len(), |i, k| m[(i, pivots[k])].clone());
    (basis, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const Q: FieldSpec = FieldSpec::Rationals;

    fn qm(rows: Vec<Vec<i64>>) -> Mat {
        Mat::from_rows(Q, rows.into_iter().map(|r| r.into_iter().map(|x| Q.from_i64(x)).collect()).collect())
    }

    #[test]
    fn rref_is_canonical() {
        let m = qm(vec![vec![0, 2, 4], vec![1, 1, 1]]);
        let r = m.rref();
        assert_eq!(r.pivots, vec![0, 1]);
        assert_eq!(r.mat, qm(vec![vec![1, 0, -1], vec![0, 1, 2]]));
    }

    #[test]
    fn solve_and_inverse() {
        let a = qm(vec![vec![2, 1], vec![1, 1]]);
        let b = qm(vec![vec![3], vec![2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Mat::identity(Q, 2));

        let singular = qm(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.inverse().is_none());
        assert!(singular.solve(&qm(vec![vec![0], vec![1]])).is_none());
    }

    #[test]
    fn quotient_space_projection() {
        // Quotient k^3 by span{e0 - e1}: classes [e1], [e2], with e0 ~ e1.
        let span = vec![vec![Q.one(), Q.from_i64(-1), Q.zero()]];
        let q = QuotientSpace::new(Q, 3, &span);
        assert_eq!(q.dim, 2);
        assert_eq!(q.representatives, vec![1, 2]);
        assert_eq!(q.project(&[Q.one(), Q.zero(), Q.zero()]), vec![Q.one(), Q.zero()]);
        assert_eq!(q.project(&[Q.zero(), Q.one(), Q.zero()]), vec![Q.one(), Q.zero()]);
        // Spanning vectors project to zero.
        assert_eq!(q.project(&span[0]), vec![Q.zero(), Q.zero()]);
    }

    #[test]
    fn column_space_picks_pivot_columns() {
        let m = qm(vec![vec![1, 2, 0], vec![2, 4, 1]]);
        let (basis, pivots) = column_space_basis(&m);
        assert_eq!(pivots, vec![0, 2]);
        assert_eq!(basis, qm(vec![vec![1, 0], vec![2, 1]]));
    }

    proptest! {
        #[test]
        fn rref_idempotent_and_rank_bounded(rows in 1usize..4, cols in 1usize..4, seed in any::<u64>()) {
            // Pseudo-random small integer matrix from the seed.
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % 7) as i64 - 3 };
            let m = Mat::from_fn(Q, rows, cols, |_, _| Q.from_i64(next()));
            let r = m.rref();
            prop_assert!(r.pivots.len() <= rows.min(cols));
            let again = r.mat.rref();
            prop_assert_eq!(&again.mat, &r.mat);
            prop_assert_eq!(again.pivots, r.pivots);
        }

        #[test]
        fn solve_is_exact_over_f5(rows in 1usize..4, cols in 1usize..4, seed in any::<u64>()) {
            let f = FieldSpec::Prime(5);
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % 5) as i64 };
            let a = Mat::from_fn(f, rows, cols, |_, _| f.from_i64(next()));
            let x = Mat::from_fn(f, cols, 1, |_, _| f.from_i64(next()));
            let b = a.mul(&x);
            // A solution must exist (x is one); the returned one must solve exactly.
            let got = a.solve(&b).expect("consistent system");
            prop_assert_eq!(a.mul(&got), b);
        }

        #[test]
        fn quotient_dim_plus_span_rank_is_ambient(dim in 1usize..5, nvec in 0usize..4, seed in any::<u64>()) {
            let f = FieldSpec::Prime(3);
            let mut s = seed;
            let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); ((s >> 33) % 3) as i64 };
            let spanning: Vec<Vec<Scalar>> = (0..nvec).map(|_| (0..dim).map(|_| f.from_i64(next())).collect()).collect();
            let q = QuotientSpace::new(f, dim, &spanning);
            let rank = if nvec == 0 { 0 } else { Mat::from_rows(f, spanning.clone()).rank() };
            prop_assert_eq!(q.dim + rank, dim);
            for v in &spanning {
                prop_assert!(q.project(v).iter().all(Scalar::is_zero));
            }
            for k in 0..q.dim {
                let mut e = vec![f.zero(); q.dim];
                e[k] = f.one();
                prop_assert_eq!(q.project(&q.lift_basis(k)), e);
            }
        }
    }
}
