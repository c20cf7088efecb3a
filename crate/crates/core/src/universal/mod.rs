//! The universal spanning-set algebra on `B = {a_-2, a_-1, a_0, a_1, a_2,
//! s, s_2, s_2^f}` over the six-variable fraction field: derivation of the
//! full multiplication table, the bilinear form, eigenvectors, the mother
//! relation, and the per-family derivation pipelines.

pub mod build;
pub mod closed_forms;
pub mod eigen;
pub mod form;
pub mod mother;

pub mod span;

pub use build::{universal, Provenance, UniversalAlgebra};
pub use eigen::Eigenvectors;
pub use form::universal_form;
pub use mother::{mother_coefficient, MotherReport};

