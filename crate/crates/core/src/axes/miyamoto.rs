//! Miyamoto involutions and the dihedral machinery they generate.

use super::fusion::{FusionRules, EIG_ONE, EIG_ZERO};
use super::report::{axis_report, eigen_decomposition, lambda_of};
use super::AxisError;
use crate::algebra::{AlgebraTable, Element, Matrix};
use crate::exact::Frac;

/// The Miyamoto involution of an axis: identity on the even eigenspaces,
/// negation on the beta eigenspace. The result is verified to square to the
/// identity and to preserve every basis product.
pub fn miyamoto(
    table: &AlgebraTable,
    a: &Element,
    rules: &FusionRules,
) -> Result<Matrix, AxisError> {
    let report = axis_report(table, a, rules)?;
    if !report.overall {
        return Err(AxisError::AxisCheckFailed(format!(
            "{}",
            report.to_json()
        )));
    }
    let mut cols: Vec<Element> = Vec::new();
    let mut signs: Vec<Frac> = Vec::new();
    for (k, space) in report.eigenspaces.iter().enumerate() {
        for v in space {
            cols.push(v.clone());
            signs.push(if rules.is_even(k) {
                Frac::one()
            } else {
                Frac::from_int(-1)
            });
        }
    }
    let p = Matrix::from_cols(&cols);
    let pinv = p.inverse().expect("eigenbasis is invertible");
    let mut d = Matrix::zero(cols.len(), cols.len());
    for (i, s) in signs.iter().enumerate() {
        d.set(i, i, s.clone());
    }
    let m = p.mul_mat(&d).mul_mat(&pinv);
    if m.mul_mat(&m) != Matrix::identity(table.dim()) {
        return Err(AxisError::AxisCheckFailed(
            "involution does not square to identity".into(),
        ));
    }
    if !table.is_automorphism(&m)? {
        return Err(AxisError::AxisCheckFailed(
            "Miyamoto map is not an automorphism".into(),
        ));
    }
    Ok(m)
}

#[derive(Debug, Clone)]
pub struct DihedralOrbit {
    /// `a_i` for `|i| <= bound`, keyed by the index `i`.
    pub elements: Vec<(i64, Element)>,
    /// Smallest `n > 0` with `a_n = a_0`, when detected within the bound.
    pub closure: Option<usize>,
    /// Number of distinct elements in `a_0^T u a_1^T`.
    pub orbit_size: usize,
    pub rho: Matrix,
}

/// Computes the dihedral orbit `a_{2i} = a_0^(rho^i)`, `a_{2i+1} =
/// a_1^(rho^i)` for `rho = tau(a_0) tau(a_1)`, detecting the first
/// recurrence `a_n = a_0`.
pub fn dihedral_orbit(
    table: &AlgebraTable,
    a0: &Element,
    a1: &Element,
    rules: &FusionRules,
    bound: u32,
) -> Result<DihedralOrbit, AxisError> {
    let t0 = miyamoto(table, a0, rules)?;
    let t1 = miyamoto(table, a1, rules)?;
    // x^rho = (x^{tau(a_0)})^{tau(a_1)}: as column maps, rho = t1 * t0.
    let rho = t1.mul_mat(&t0);
    let rho_inv = rho.inverse().expect("product of involutions");

    let element_at = |i: i64| -> Element {
        let (base, steps) = if i.rem_euclid(2) == 0 {
            (a0.clone(), i / 2)
        } else {
            (a1.clone(), (i - 1) / 2)
        };
        let mut v = base;
        let m = if steps >= 0 { &rho } else { &rho_inv };
        for _ in 0..steps.abs() {
            v = m.mul_vec(&v);
        }
        v
    };

    let mut elements = Vec::new();
    for i in -(bound as i64)..=(bound as i64) {
        elements.push((i, element_at(i)));
    }

    let mut closure = None;
    for n in 1..=(2 * bound as i64 + 2) {
        if element_at(n) == *a0 {
            closure = Some(n as usize);
            break;
        }
    }

    let mut distinct: Vec<Element> = Vec::new();
    let span = closure.map(|n| n as i64).unwrap_or(2 * bound as i64 + 2);
    for i in 0..span {
        let v = element_at(i);
        if !distinct.contains(&v) {
            distinct.push(v);
        }
    }

    Ok(DihedralOrbit {
        elements,
        closure,
        orbit_size: distinct.len(),
        rho,
    })
}

/// Exact multiplicative order of `rho = tau(a_0) tau(a_1)`, additionally
/// asserting `rho^(|a_0^T u a_1^T|) = 1`.
pub fn rho_order(
    table: &AlgebraTable,
    a0: &Element,
    a1: &Element,
    rules: &FusionRules,
) -> Result<u32, AxisError> {
    let orbit = dihedral_orbit(table, a0, a1, rules, 8)?;
    let order = orbit.rho.order(12).ok_or(AxisError::OrderExceeded(12))?;
    let n = orbit.orbit_size as u32;
    if orbit.rho.pow(n) != Matrix::identity(table.dim()) {
        return Err(AxisError::AxisCheckFailed(format!(
            "rho^{n} is not the identity"
        )));
    }
    Ok(order)
}

/// Seress associativity: `a(xz) = (ax)z` for every basis `x` and every `z`
/// in a basis of the `{1,0}`-eigenspace of `a`.
pub fn seress_check(
    table: &AlgebraTable,
    a: &Element,
    rules: &FusionRules,
) -> Result<Result<(), String>, AxisError> {
    let spaces = eigen_decomposition(table, a, rules)?;
    let mut even: Vec<Element> = Vec::new();
    even.extend(spaces[EIG_ONE].iter().cloned());
    even.extend(spaces[EIG_ZERO].iter().cloned());
    for (zi, z) in even.iter().enumerate() {
        for xi in 0..table.dim() {
            let x = table.basis_element(xi);
            let lhs = table.multiply(a, &table.multiply(&x, z)?)?;
            let rhs = table.multiply(&table.multiply(a, &x)?, z)?;
            if lhs != rhs {
                return Ok(Err(format!(
                    "a(xz) != (ax)z for x = {} and z = even eigvec {zi}",
                    table.basis[xi]
                )));
            }
        }
    }
    Ok(Ok(()))
}

/// Transport of axes along an automorphism: `a^t` is again an axis and the
/// coefficient functionals agree, `lambda^a(x) = lambda^(a^t)(x^t)`.
pub fn axis_transport_check(
    table: &AlgebraTable,
    a: &Element,
    t: &Matrix,
    rules: &FusionRules,
) -> Result<bool, AxisError> {
    if !table.is_automorphism(t)? {
        return Err(AxisError::AxisCheckFailed(
            "transport map is not an automorphism".into(),
        ));
    }
    let at = t.mul_vec(a);
    let report = axis_report(table, &at, rules)?;
    if !report.overall {
        return Ok(false);
    }
    for i in 0..table.dim() {
        let x = table.basis_element(i);
        let lhs = lambda_of(table, a, &x, rules)?;
        let rhs = lambda_of(table, &at, &t.mul_vec(&x), rules)?;
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}
