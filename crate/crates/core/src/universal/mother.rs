//! The mother relation: the fusion obstruction carried by the coefficient
//! of `a_-1` in `a_0 (z_2 z_2)` under the symmetric-lambda assumption.

use super::build::UniversalAlgebra;
use super::closed_forms;
use super::eigen::zero_eigenvector;
use super::span::*;
use crate::exact::{Frac, Var};

#[derive(Debug, Clone)]
pub struct MotherReport {
    /// Coefficient of `a_-1` in `a_0(z_2 z_2)`.
    pub coefficient: Frac,
    /// The closed three-factor product it must equal.
    pub factored: Frac,
    pub matches: bool,
    /// The spanning coefficients of `a_0(z_2 z_2)` outside
    /// `{a_-2, a_-1, a_0, a_1, a_2}` all vanish.
    pub only_axis_support: bool,
    /// The full product `a_0(z_2 z_2)` for downstream factor analysis.
    pub product: crate::algebra::Element,
}

/// Computes `a_0(z_2 z_2)` in the symmetric-lambda table and compares the
/// `a_-1` coefficient against the three-factor closed form.
pub fn mother_coefficient(u: &UniversalAlgebra) -> Result<MotherReport, String> {
    let table = u.symmetric_lambda_table();
    let z2 = zero_eigenvector(A2, AM2, S2, &Frac::var(Var::Lm2));
    let z2z2 = table.multiply(&z2, &z2).map_err(|e| e.to_string())?;
    let product = table.multiply(&unit(A0), &z2z2).map_err(|e| e.to_string())?;

    let coefficient = product[AM1].clone();
    let (pre, factors) = closed_forms::mother_factors();
    let factored = pre
        .mul(&factors[0])
        .mul(&factors[1])
        .mul(&factors[2]);
    let matches = coefficient == factored;
    let only_axis_support =
        product[S].is_zero() && product[S2].is_zero() && product[S2F].is_zero();
    Ok(MotherReport {
        coefficient,
        factored,
        matches,
        only_axis_support,
        product,
    })
}

#[cfg(test)]
mod tests {
    use super::super::build::universal;
    use super::*;

    #[test]
    fn mother_coefficient_factors_as_stated() {
        let r = mother_coefficient(universal()).unwrap();
        assert!(r.matches, "a_-1 coefficient does not match the closed form");
        assert!(r.only_axis_support);
        assert!(!r.product[AM2].is_zero());
        assert!(!r.product[A0].is_zero());
    }
}
