//! Verification of the Phi(alpha,beta)-axis axioms: fusion-rule closure,
//! Miyamoto involutions, dihedral orbits, and the associated lemmas.

mod fusion;
mod miyamoto;
mod report;

pub use fusion::{FusionRules, EIG_ALPHA, EIG_BETA, EIG_ONE, EIG_ZERO};
pub use miyamoto::{
    axis_transport_check, dihedral_orbit, miyamoto, rho_order, seress_check, DihedralOrbit,
};
pub use report::{axis_report, eigen_decomposition, lambda_of, AxisReport, FusionVerdict};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum AxisError {
    #[error("fusion eigenvalues not pairwise distinct: {0}")]
    DegenerateEigenvalues(String),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("element is not a primitive axis")]
    NotPrimitive,
    #[error("axis check failed: {0}")]
    AxisCheckFailed(String),
    #[error("automorphism order exceeds {0}")]
    OrderExceeded(u32),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}
