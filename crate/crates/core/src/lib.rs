//! Exact decision procedures for finite-dimensional bialgebras given by
//! structure constants over `Q` or `F_p`.
//!
//! The crate answers, with exact linear algebra and no tolerances:
//!
//! * does a bialgebra admit a right (left, two-sided) antipode, and which
//!   strengthened identities does it satisfy ([`conv`]);
//! * how do the coinvariants and the bar quotient of a Hopf module sit
//!   inside it, and is the canonical comparison map between them invertible
//!   ([`hopfmod`]);
//! * does the bialgebra carry a Frobenius system whose form comes from a
//!   one-dimensional space of integrals, and do the induced hom-space
//!   bijections hold on concrete witnesses ([`frob`]).
//!
//! Everything is computed over a dense exact matrix substrate ([`matrix`],
//! [`space`]) with canonical reduced echelon forms, so equal subspaces
//! compare equal entrywise and every run is bit-for-bit reproducible.

pub mod bialg;
pub mod conv;
pub mod frob;
pub mod hopfmod;
pub mod io;
pub mod matrix;
pub mod scalar;
pub mod space;
pub mod zoo;

pub use bialg::{AxiomReport, Bialgebra};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};
pub use space::{AffineSolution, QuotientSpace, Subspace};

use thiserror::Error as ThisError;

/// Structural errors: malformed input that prevents computation.
/// Mathematical outcomes (no antipode, singular form, ...) are typed results
/// on the operations themselves, never errors.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {input:?}: {reason}")]
    ScalarParse { input: String, reason: String },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch {
        expected: scalar::Field,
        found: scalar::Field,
    },
    #[error("shape error: {0}")]
    Shape(String),
    #[error("invalid multiplication table: {0}")]
    CayleyInvalid(String),
    #[error("bialgebra axioms fail:\n{0}")]
    AxiomsFail(Box<AxiomReport>),
    #[error("invalid bialgebra data: {0}")]
    InvalidData(String),
    #[error("unknown generator name {0:?}")]
    UnknownGenerator(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
