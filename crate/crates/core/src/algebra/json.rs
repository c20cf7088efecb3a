//! JSON export/import of multiplication tables.
//!
//! Pair keys use basis indices `i,j` with `i <= j`; all scalars use the
//! canonical expression grammar, so files round-trip exactly.

use super::element::Element;
use super::table::AlgebraTable;
use super::AlgebraError;
use crate::exact::{parse_frac, parse_poly, Frac, RingSpec, Var};
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;

pub fn export_table(t: &AlgebraTable) -> String {
    let mut products = Map::new();
    for ((i, j), v) in t.products() {
        let mut entry = Map::new();
        for (k, c) in v.coeffs.iter().enumerate() {
            if !c.is_zero() {
                entry.insert(t.basis[k].clone(), Value::String(c.to_string()));
            }
        }
        products.insert(format!("{i},{j}"), Value::Object(entry));
    }
    let mut doc = Map::new();
    doc.insert("name".into(), Value::String(t.name.clone()));
    doc.insert(
        "variables".into(),
        Value::Array(
            t.ring
                .variables
                .iter()
                .map(|v| Value::String(v.name().into()))
                .collect(),
        ),
    );
    doc.insert(
        "inverted".into(),
        Value::Array(
            t.ring
                .inverted
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    doc.insert(
        "constraints".into(),
        Value::Array(
            t.ring
                .constraints
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    doc.insert(
        "basis".into(),
        Value::Array(t.basis.iter().map(|l| Value::String(l.clone())).collect()),
    );
    doc.insert("products".into(), Value::Object(products));
    if let Some(form) = &t.form {
        let mut fm = Map::new();
        for ((i, j), v) in form {
            fm.insert(format!("{i},{j}"), Value::String(v.to_string()));
        }
        doc.insert("form".into(), Value::Object(fm));
    }
    doc.insert(
        "validity_nonzero".into(),
        Value::Array(
            t.validity_nonzero
                .iter()
                .map(|p| Value::String(p.to_string()))
                .collect(),
        ),
    );
    doc.insert(
        "fusion".into(),
        json!({
            "alpha": t.fusion_alpha.to_string(),
            "beta": t.fusion_beta.to_string(),
        }),
    );
    let mut out = serde_json::to_string_pretty(&Value::Object(doc)).expect("serializable");
    out.push('\n');
    out
}

fn as_str<'a>(v: &'a Value, what: &str) -> Result<&'a str, AlgebraError> {
    v.as_str()
        .ok_or_else(|| AlgebraError::Other(format!("expected string for {what}")))
}

fn parse_pair_key(key: &str) -> Result<(usize, usize), AlgebraError> {
    let mut it = key.split(',');
    let bad = || AlgebraError::Other(format!("bad pair key `{key}`"));
    let i: usize = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    let j: usize = it.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    if it.next().is_some() || i > j {
        return Err(bad());
    }
    Ok((i, j))
}

pub fn import_table(text: &str) -> Result<AlgebraTable, AlgebraError> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| AlgebraError::Other(format!("invalid JSON: {e}")))?;
    let obj = doc
        .as_object()
        .ok_or_else(|| AlgebraError::Other("top level must be an object".into()))?;
    let get = |k: &str| {
        obj.get(k)
            .ok_or_else(|| AlgebraError::Other(format!("missing key `{k}`")))
    };

    let name = as_str(get("name")?, "name")?.to_string();
    let basis: Vec<String> = get("basis")?
        .as_array()
        .ok_or_else(|| AlgebraError::Other("basis must be an array".into()))?
        .iter()
        .map(|v| as_str(v, "basis label").map(str::to_string))
        .collect::<Result<_, _>>()?;
    let dim = basis.len();

    let parse_poly_list = |key: &str| -> Result<Vec<crate::exact::Poly>, AlgebraError> {
        get(key)?
            .as_array()
            .ok_or_else(|| AlgebraError::Other(format!("{key} must be an array")))?
            .iter()
            .map(|v| {
                parse_poly(as_str(v, key)?)
                    .map_err(|e| AlgebraError::Other(format!("{key}: {e}")))
            })
            .collect()
    };

    let variables: Vec<Var> = get("variables")?
        .as_array()
        .ok_or_else(|| AlgebraError::Other("variables must be an array".into()))?
        .iter()
        .map(|v| {
            let s = as_str(v, "variable")?;
            Var::from_name(s).ok_or_else(|| AlgebraError::Other(format!("unknown variable {s}")))
        })
        .collect::<Result<_, _>>()?;

    let ring = RingSpec::new(variables, parse_poly_list("inverted")?, parse_poly_list("constraints")?);

    let fusion = get("fusion")?
        .as_object()
        .ok_or_else(|| AlgebraError::Other("fusion must be an object".into()))?;
    let fa = parse_frac(as_str(
        fusion
            .get("alpha")
            .ok_or_else(|| AlgebraError::Other("missing fusion.alpha".into()))?,
        "fusion.alpha",
    )?)
    .map_err(|e| AlgebraError::Other(e.to_string()))?;
    let fb = parse_frac(as_str(
        fusion
            .get("beta")
            .ok_or_else(|| AlgebraError::Other("missing fusion.beta".into()))?,
        "fusion.beta",
    )?)
    .map_err(|e| AlgebraError::Other(e.to_string()))?;

    let mut table = AlgebraTable::new(name, ring, basis.clone(), fa, fb);
    table.validity_nonzero = parse_poly_list("validity_nonzero")?;

    let products = get("products")?
        .as_object()
        .ok_or_else(|| AlgebraError::Other("products must be an object".into()))?;
    for (key, entry) in products {
        let (i, j) = parse_pair_key(key)?;
        if i >= dim || j >= dim {
            return Err(AlgebraError::Other(format!("pair key `{key}` out of range")));
        }
        let entry = entry
            .as_object()
            .ok_or_else(|| AlgebraError::Other("product entry must be an object".into()))?;
        let mut elem = Element::zero(dim);
        for (label, expr) in entry {
            let k = basis
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| AlgebraError::Other(format!("unknown label {label}")))?;
            elem[k] = parse_frac(as_str(expr, "product coefficient")?)
                .map_err(|e| AlgebraError::Other(e.to_string()))?;
        }
        table.set_product(i, j, elem);
    }
    if !table.is_complete() {
        return Err(AlgebraError::Other("incomplete product table".into()));
    }

    if let Some(form) = obj.get("form") {
        let form = form
            .as_object()
            .ok_or_else(|| AlgebraError::Other("form must be an object".into()))?;
        let mut fm: BTreeMap<(usize, usize), Frac> = BTreeMap::new();
        for (key, expr) in form {
            let (i, j) = parse_pair_key(key)?;
            fm.insert(
                (i, j),
                parse_frac(as_str(expr, "form entry")?)
                    .map_err(|e| AlgebraError::Other(e.to_string()))?,
            );
        }
        for ((i, j), v) in fm {
            table.set_form_pair(i, j, v);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_is_bit_exact() {
        let mut t = AlgebraTable::new(
            "toy",
            RingSpec::new(vec![Var::Al], vec![parse_poly("al").unwrap()], vec![]),
            vec!["a0".into(), "a1".into()],
            Frac::var(Var::Al),
            Frac::rat(1, 32),
        );
        t.set_product(0, 0, Element::unit(2, 0));
        t.set_product(1, 1, Element::unit(2, 1));
        t.set_product(
            0,
            1,
            Element::from_coeffs(vec![Frac::var(Var::Al), Frac::rat(-1, 2)]),
        );
        t.set_form_pair(0, 0, Frac::one());
        t.set_form_pair(1, 1, Frac::one());
        t.set_form_pair(0, 1, Frac::var(Var::Al));
        t.validity_nonzero = vec![parse_poly("al-1").unwrap()];
        let text = export_table(&t);
        let back = import_table(&text).unwrap();
        assert_eq!(export_table(&back), text);
        assert_eq!(back, t);
    }

    #[test]
    fn incomplete_table_rejected() {
        let text = r#"{
            "name": "bad", "variables": [], "inverted": [], "constraints": [],
            "basis": ["a0", "a1"], "products": {"0,0": {"a0": "1"}},
            "validity_nonzero": [], "fusion": {"alpha": "1/4", "beta": "1/32"}
        }"#;
        assert!(import_table(text).is_err());
    }
}
