//! Frobenius-form verification and Gram analysis.
