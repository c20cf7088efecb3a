//! Axis verification: eigenspace decomposition, primitivity, and
//! fusion-rule closure, with minimal failure witnesses.

use super::fusion::{FusionRules, EIG_ONE};
use super::AxisError;
use crate::algebra::{AlgebraTable, Element, Matrix};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionVerdict {
    pub pass: bool,
    /// A failing product as a witness: which eigenbasis vectors and what
    /// their product was.
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct AxisReport {
    pub idempotent: bool,
    /// Eigenspace bases indexed like the fusion eigenvalues `1,0,alpha,beta`.
    pub eigenspaces: Vec<Vec<Element>>,
    pub semisimple: bool,
    pub primitive: bool,
    pub fusion: BTreeMap<(usize, usize), FusionVerdict>,
    pub overall: bool,
    pub eigenvalue_names: [String; 4],
}

impl AxisReport {
    fn failed(names: [String; 4]) -> AxisReport {
        AxisReport {
            idempotent: false,
            eigenspaces: vec![Vec::new(); 4],
            semisimple: false,
            primitive: false,
            fusion: BTreeMap::new(),
            overall: false,
            eigenvalue_names: names,
        }
    }

    pub fn eigenspace_dims(&self) -> [usize; 4] {
        [
            self.eigenspaces[0].len(),
            self.eigenspaces[1].len(),
            self.eigenspaces[2].len(),
            self.eigenspaces[3].len(),
        ]
    }

    pub fn to_json(&self) -> Value {
        let mut dims = Map::new();
        for (k, name) in self.eigenvalue_names.iter().enumerate() {
            dims.insert(name.clone(), json!(self.eigenspaces[k].len()));
        }
        let mut fusion = Map::new();
        for ((i, j), v) in &self.fusion {
            let key = format!(
                "{}*{}",
                self.eigenvalue_names[*i], self.eigenvalue_names[*j]
            );
            let val = if v.pass {
                json!("pass")
            } else {
                json!({ "fail": v.witness.clone().unwrap_or_default() })
            };
            fusion.insert(key, val);
        }
        json!({
            "idempotent": self.idempotent,
            "eigenspace_dims": Value::Object(dims),
            "semisimple": self.semisimple,
            "primitive": self.primitive,
            "fusion": Value::Object(fusion),
            "overall": self.overall,
        })
    }
}

/// Eigenspace of `ad(a)` for the eigenvalue `phi` as a kernel computation.
fn eigenspace(ad: &Matrix, phi: &crate::exact::Frac) -> Vec<Element> {
    let n = ad.rows;
    let shifted = ad.sub_mat(&Matrix::identity(n).scale(phi));
    shifted.kernel()
}

/// Decomposes into eigenspaces for the four fusion eigenvalues.
/// Errors when `a` is not idempotent.
pub fn eigen_decomposition(
    table: &AlgebraTable,
    a: &Element,
    rules: &FusionRules,
) -> Result<Vec<Vec<Element>>, AxisError> {
    if table.multiply(a, a)? != *a || a.is_zero() {
        return Err(AxisError::NotIdempotent);
    }
    let ad = table.ad_matrix(a)?;
    Ok(rules
        .eigenvalues
        .iter()
        .map(|phi| eigenspace(&ad, phi))
        .collect())
}

/// The coefficient functional of a primitive axis: `x_1 = lambda^a(x) a`.
pub fn lambda_of(
    table: &AlgebraTable,
    a: &Element,
    x: &Element,
    rules: &FusionRules,
) -> Result<crate::exact::Frac, AxisError> {
    let spaces = eigen_decomposition(table, a, rules)?;
    let dims: usize = spaces.iter().map(Vec::len).sum();
    if spaces[EIG_ONE].len() != 1 || dims != table.dim() {
        return Err(AxisError::NotPrimitive);
    }
    // Basis: a itself for the 1-eigenspace, then the rest.
    let mut basis = vec![a.clone()];
    for (k, space) in spaces.iter().enumerate() {
        if k == EIG_ONE {
            continue;
        }
        basis.extend(space.iter().cloned());
    }
    let coords = Matrix::coordinates_in_span(&basis, x).ok_or(AxisError::NotPrimitive)?;
    Ok(coords[0].clone())
}

/// Runs the full axis check and reports every part of the verdict.
pub fn axis_report(
    table: &AlgebraTable,
    a: &Element,
    rules: &FusionRules,
) -> Result<AxisReport, AxisError> {
    let names = [
        rules.eigenvalues[0].to_string(),
        rules.eigenvalues[1].to_string(),
        rules.eigenvalues[2].to_string(),
        rules.eigenvalues[3].to_string(),
    ];
    if a.is_zero() || table.multiply(a, a)? != *a {
        return Ok(AxisReport::failed(names));
    }
    let ad = table.ad_matrix(a)?;
    let eigenspaces: Vec<Vec<Element>> = rules
        .eigenvalues
        .iter()
        .map(|phi| eigenspace(&ad, phi))
        .collect();
    let total: usize = eigenspaces.iter().map(Vec::len).sum();
    let semisimple = total == table.dim();
    let primitive = eigenspaces[EIG_ONE].len() == 1
        && Matrix::coordinates_in_span(&eigenspaces[EIG_ONE], a).is_some();

    let mut fusion = BTreeMap::new();
    let mut all_pass = true;
    for i in 0..4 {
        for j in i..4 {
            if eigenspaces[i].is_empty() || eigenspaces[j].is_empty() {
                continue;
            }
            let allowed = rules.star(i, j);
            let mut target: Vec<Element> = Vec::new();
            for &k in allowed {
                target.extend(eigenspaces[k].iter().cloned());
            }
            let mut verdict = FusionVerdict {
                pass: true,
                witness: None,
            };
            'pairs: for (ui, u) in eigenspaces[i].iter().enumerate() {
                for (vj, v) in eigenspaces[j].iter().enumerate() {
                    let p = table.multiply(u, v)?;
                    let ok = if p.is_zero() {
                        true
                    } else {
                        Matrix::coordinates_in_span(&target, &p).is_some()
                    };
                    if !ok {
                        verdict.pass = false;
                        verdict.witness = Some(format!(
                            "eigvec {ui} of {} times eigvec {vj} of {} gives {}",
                            names[i],
                            names[j],
                            p.display_with(&table.basis)
                        ));
                        all_pass = false;
                        break 'pairs;
                    }
                }
            }
            fusion.insert((i, j), verdict);
        }
    }

    let overall = semisimple && primitive && all_pass;
    Ok(AxisReport {
        idempotent: true,
        eigenspaces,
        semisimple,
        primitive,
        fusion,
        overall,
        eigenvalue_names: names,
    })
}
