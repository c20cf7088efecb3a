//! The bilinear form on the universal span.
//!
//! The form exists only in the symmetric-lambda ring (`lm1f = lm1`,
//! `lm2f = lm2`): symmetry of `(a_0, a_1)` forces it. Values on pairs of
//! spanning elements come from the necessary relations
//! `(a_i, x) = lambda^{a_i}(x)` and `(xy, z) = (x, yz)`, extended over the
//! dihedral action; the classical displays are kept as an independent
//! transcription and compared in tests.

use super::build::UniversalAlgebra;
use super::closed_forms::form_values;
use super::span::*;
use crate::exact::{Frac, Var};
use std::collections::BTreeMap;

pub type FormTable = BTreeMap<(usize, usize), Frac>;

fn key(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

/// The transcribed form table on all spanning pairs, with the values not
/// covered by a display obtained by pairing against the expansions of
/// `a_3` and `a_4` (the dihedral-transport rule).
pub fn universal_form(u: &UniversalAlgebra) -> FormTable {
    let lm1 = Frac::var(Var::Lm1);
    let lm2 = Frac::var(Var::Lm2);
    let mut f = FormTable::new();
    for i in [AM2, AM1, A0, A1, A2] {
        f.insert(key(i, i), Frac::one());
    }
    // axis pairs by circular-free distance
    let axes = [AM2, AM1, A0, A1, A2];
    for (p, &i) in axes.iter().enumerate() {
        for &j in axes.iter().skip(p + 1) {
            let d = (j as i64 - i as i64).unsigned_abs();
            match d {
                1 => {
                    f.insert(key(i, j), lm1.clone());
                }
                2 => {
                    f.insert(key(i, j), lm2.clone());
                }
                _ => {}
            }
        }
    }
    // distance 3 and 4 via (a_0, a_3) and (a_0, a_4)
    let pair_with_a0 = |x: &crate::algebra::Element, f: &FormTable| -> Frac {
        let mut acc = Frac::zero();
        for k in 0..DIM {
            if !x[k].is_zero() {
                acc = acc.add(&x[k].mul(&f[&key(A0, k)]));
            }
        }
        acc
    };
    for i in [AM2, AM1, A0, A1, A2] {
        f.insert(key(i, S), form_values::a_s());
        let even = matches!(i, AM2 | A0 | A2);
        f.insert(
            key(i, S2),
            if even {
                form_values::a_s2_even()
            } else {
                form_values::a_s2_odd()
            },
        );
        f.insert(
            key(i, S2F),
            if even {
                form_values::a_s2_odd()
            } else {
                form_values::a_s2_even()
            },
        );
    }
    f.insert(key(S, S), form_values::s_s());
    f.insert(key(S, S2), form_values::s_s2());
    f.insert(key(S, S2F), form_values::s_s2());
    f.insert(key(S2, S2), form_values::s2_s2());
    f.insert(key(S2F, S2F), form_values::s2_s2());
    f.insert(key(S2, S2F), form_values::s2_s2f());
    // distance-3 pairs equal (a_0, a_3); distance-4 equals (a_0, a_4)
    let d3 = pair_with_a0(&u.a3_symmetric(), &f);
    let sym = |x: &crate::algebra::Element| {
        let mut assign = BTreeMap::new();
        assign.insert(Var::Lm1f, Frac::var(Var::Lm1));
        assign.insert(Var::Lm2f, Frac::var(Var::Lm2));
        x.substitute(&assign).expect("no poles")
    };
    let d4 = pair_with_a0(&sym(&u.a4), &f);
    f.insert(key(AM1, A2), d3.clone());
    f.insert(key(AM2, A1), d3);
    f.insert(key(AM2, A2), d4);
    f
}

/// Form derived from first principles on the symmetric-lambda table:
/// `(a_i, x) = lambda^{a_i}(x)` for the five axes, then the rows of `s`,
/// `s_2`, `s_2^f` by the association rule on their defining words.
pub fn derived_form(u: &UniversalAlgebra) -> Result<FormTable, String> {
    use crate::axes::{lambda_of, FusionRules};
    let table = u.symmetric_lambda_table();
    let rules = FusionRules::ising(Frac::var(Var::Al), Frac::var(Var::Bt))
        .map_err(|e| e.to_string())?;
    let mut f = FormTable::new();
    for i in [AM2, AM1, A0, A1, A2] {
        let a = unit(i);
        for j in 0..DIM {
            let v = lambda_of(&table, &a, &unit(j), &rules).map_err(|e| e.to_string())?;
            match f.get(&key(i, j)) {
                None => {
                    f.insert(key(i, j), v);
                }
                Some(prev) => {
                    if *prev != v {
                        return Err(format!(
                            "necessary form values disagree on ({}, {})",
                            LABELS[i], LABELS[j]
                        ));
                    }
                }
            }
        }
    }
    // rows of the s-type elements against each other via association on
    // their defining words: s = a_0 a_1 - bt(a_0 + a_1), etc.
    let bt = Frac::var(Var::Bt);
    let defs: [(usize, usize, usize); 3] = [(S, A0, A1), (S2, A0, A2), (S2F, AM1, A1)];
    for (st, gi, gj) in defs {
        for t in [S, S2, S2F] {
            if f.contains_key(&key(st, t)) {
                continue;
            }
            // (st, t) = (a_gi, a_gj * t) - bt (a_gi, t) - bt (a_gj, t)
            let prod = table
                .multiply(&unit(gj), &unit(t))
                .map_err(|e| e.to_string())?;
            let mut acc = Frac::zero();
            for k in 0..DIM {
                if !prod[k].is_zero() {
                    let w = f
                        .get(&key(gi, k))
                        .ok_or_else(|| "axis row missing".to_string())?;
                    acc = acc.add(&prod[k].mul(w));
                }
            }
            let v = acc
                .sub(&bt.mul(&f[&key(gi, t)]))
                .sub(&bt.mul(&f[&key(gj, t)]));
            f.insert(key(st, t), v);
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::super::build::universal;
    use super::*;

    #[test]
    fn transcribed_form_matches_derived_form() {
        let u = universal();
        let printed = universal_form(u);
        let derived = derived_form(u).unwrap();
        let mut mismatches = Vec::new();
        for (k, v) in &printed {
            if derived.get(k) != Some(v) {
                mismatches.push(format!(
                    "({},{}): printed {} vs derived {}",
                    LABELS[k.0],
                    LABELS[k.1],
                    v,
                    derived
                        .get(k)
                        .map(|x| x.to_string())
                        .unwrap_or_else(|| "<none>".into())
                ));
            }
        }
        assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
        assert_eq!(printed.len(), derived.len());
    }
}
