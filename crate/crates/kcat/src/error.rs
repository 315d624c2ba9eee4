//! Crate-wide error type.
//!
//! Malformed input (dangling labels, wrong coordinate lengths, schema
//! violations) is kept distinct from axiom violations: the former means the
//! data does not describe a structure at all, the latter that a well-formed
//! structure fails its laws. Axiom failures are usually reported through
//! [`crate::report::ValidationReport`] rather than this type; the variants
//! here carry the cases where an operation cannot even produce output.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("not idempotent: {0}")]
    NotIdempotent(String),
    #[error("not orthogonal: {0}")]
    NotOrthogonal(String),
    #[error("not complete: {0}")]
    NotComplete(String),
    #[error("empty index set at object {0}")]
    EmptyIndexSet(String),
    #[error("group action is not free: element {element} fixes object {object}")]
    NotFreeAction { element: String, object: String },
    #[error("nontrivial object action: element {element} moves object {object}")]
    NontrivialObjectAction { element: String, object: String },
    #[error("enumeration requires a finite field")]
    FieldNotFinite,
    #[error("dimension too large: {0}")]
    DimTooLarge(String),
    #[error("invalid Morita context: {0}")]
    InvalidContext(String),
}

pub type Result<T> = std::result::Result<T, Error>;
