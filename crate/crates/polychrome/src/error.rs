//! Error type shared by the whole crate.
//!
//! The three top-level kinds mirror how callers are expected to react:
//! parse errors are user-input problems, capacity errors mean an input is
//! too large for the exhaustive algorithms, and precondition errors mean an
//! operation was called on data that violates its contract.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A text input (graph file, labeling file, ...) could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),

    /// An input exceeds the size limits of the exhaustive enumerations.
    #[error("capacity exceeded: {0}")]
    Capacity(String),

    /// A precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An independence family fails one of the three matroid axioms.
    #[error("matroid axiom {axiom} violated: {witness}")]
    MatroidAxiom { axiom: u8, witness: String },
}

pub type Result<T> = std::result::Result<T, Error>;
