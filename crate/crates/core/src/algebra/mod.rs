//! Finite-dimensional commutative nonassociative algebras presented by
//! multiplication tables over the exact fraction field, with the exact
//! linear algebra the verifications require.

mod element;
mod iso;
mod json;
mod matrix;
mod table;

pub use element::Element;
pub use iso::{generated_isomorphism, GenMap, IsoWitness};
pub use json::{import_table, export_table};
pub use matrix::Matrix;
pub use table::AlgebraTable;

use crate::exact::Poly;
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("validity violation: {0} vanishes at the assignment")]
    ValidityViolation(Poly),
    #[error("missing product {0}*{1}")]
    MissingProduct(String, String),
    #[error("no bilinear form on algebra {0}")]
    NoForm(String),
    #[error("no such basis label {0}")]
    NoSuchLabel(String),
    #[error("isomorphism failure: {0}")]
    IsoFailure(String),
    #[error("exact arithmetic error: {0}")]
    Exact(#[from] crate::exact::ExactError),
    #[error("{0}")]
    Other(String),
}
