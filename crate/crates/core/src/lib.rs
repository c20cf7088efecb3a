//! Exact computer algebra for 2-generated axial algebras with Ising fusion
//! rules: the Norton-Sakuma algebras, their parametrized covers, and the
//! universal spanning-set algebra on eight elements.
//!
//! All arithmetic is exact: arbitrary-precision rationals, sparse
//! multivariate polynomials in the six parameters `al, bt, lm1, lm1f, lm2,
//! lm2f`, and their normalized fraction field. No floating point anywhere.

pub mod algebra;
pub mod analysis;
pub mod axes;
pub mod catalog;
pub mod exact;
pub mod universal;

pub use exact::{Frac, Poly, Rat, Var};
