//! Generator-based isomorphism checking.
//!
//! Cover tables and Norton-Sakuma tables use different spanning
//! conventions, so isomorphisms are found by closing words in the two
//! generators rather than by matching bases: the breadth-first closure of
//! products builds a linear correspondence, which is then re-verified as a
//! product-preserving invertible map.

use super::element::Element;
use super::matrix::Matrix;
use super::table::AlgebraTable;
use super::AlgebraError;

/// Generator assignment `(a0 -> a0', a1 -> a1')` by basis label.
#[derive(Debug, Clone)]
pub struct GenMap {
    pub from: (String, String),
    pub to: (String, String),
}

#[derive(Debug, Clone)]
pub struct IsoWitness {
    /// Dimension of the generated subalgebras.
    pub dim: usize,
    /// Word descriptions of the closure basis, for reports.
    pub words: Vec<String>,
    /// Closure basis in the source algebra's coordinates.
    pub basis_from: Vec<Element>,
    /// Matching basis in the target algebra's coordinates.
    pub basis_to: Vec<Element>,
    /// When the closures exhaust both algebras, the linear map as a matrix.
    pub map: Option<Matrix>,
}

/// Closes the generator pair under multiplication and checks that the
/// linear correspondence `word(A) -> word(B)` is well defined and product
/// preserving. The witness is re-verified on every closure basis pair.
pub fn generated_isomorphism(
    a: &AlgebraTable,
    b: &AlgebraTable,
    genmap: &GenMap,
) -> Result<IsoWitness, AlgebraError> {
    let ga0 = a.element_by_label(&genmap.from.0)?;
    let ga1 = a.element_by_label(&genmap.from.1)?;
    let gb0 = b.element_by_label(&genmap.to.0)?;
    let gb1 = b.element_by_label(&genmap.to.1)?;

    // Discovered words, in both algebras, together with the linearly
    // independent subset used as the closure basis.
    let mut words: Vec<String> = vec![genmap.from.0.clone(), genmap.from.1.clone()];
    let mut list_a: Vec<Element> = vec![ga0, ga1];
    let mut list_b: Vec<Element> = vec![gb0, gb1];
    let mut basis_idx: Vec<usize> = Vec::new();
    let mut basis_a: Vec<Element> = Vec::new();
    let mut basis_b: Vec<Element> = Vec::new();

    for i in 0..list_a.len() {
        if Matrix::coordinates_in_span(&basis_a, &list_a[i]).is_none() {
            basis_a.push(list_a[i].clone());
            basis_b.push(list_b[i].clone());
            basis_idx.push(i);
        }
    }

    let mut next = 0;
    while next < basis_idx.len() {
        // multiply the newest basis word against all current basis words
        let i = basis_idx[next];
        for &j in basis_idx.clone().iter() {
            let pa = a.multiply(&list_a[i], &list_a[j])?;
            let pb = b.multiply(&list_b[i], &list_b[j])?;
            let word = format!("({})*({})", words[i], words[j]);
            match Matrix::coordinates_in_span(&basis_a, &pa) {
                Some(coords) => {
                    // the correspondence must map pa to pb
                    let mut expect = Element::zero(b.dim());
                    for (k, c) in coords.coeffs.iter().enumerate() {
                        expect = expect.add_scaled(c, &basis_b[k]);
                    }
                    if expect != pb {
                        return Err(AlgebraError::IsoFailure(format!(
                            "word {word} maps inconsistently"
                        )));
                    }
                }
                None => {
                    if Matrix::coordinates_in_span(&basis_b, &pb).is_some() {
                        return Err(AlgebraError::IsoFailure(format!(
                            "word {word} is independent on one side only"
                        )));
                    }
                    words.push(word);
                    list_a.push(pa);
                    list_b.push(pb);
                    basis_idx.push(list_a.len() - 1);
                    basis_a.push(list_a.last().unwrap().clone());
                    basis_b.push(list_b.last().unwrap().clone());
                }
            }
        }
        next += 1;
    }

    let dim = basis_a.len();

    // Re-verify: the correspondence preserves products on all basis pairs.
    for i in 0..dim {
        for j in i..dim {
            let pa = a.multiply(&basis_a[i], &basis_a[j])?;
            let pb = b.multiply(&basis_b[i], &basis_b[j])?;
            let coords = Matrix::coordinates_in_span(&basis_a, &pa).ok_or_else(|| {
                AlgebraError::IsoFailure("closure not multiplicatively closed".into())
            })?;
            let mut expect = Element::zero(b.dim());
            for (k, c) in coords.coeffs.iter().enumerate() {
                expect = expect.add_scaled(c, &basis_b[k]);
            }
            if expect != pb {
                return Err(AlgebraError::IsoFailure(format!(
                    "product of basis words {i},{j} not preserved"
                )));
            }
        }
    }

    // Rank check on the target side: the map must be injective.
    let rank_b = Matrix::from_cols(&basis_b).rank();
    if rank_b != dim {
        return Err(AlgebraError::IsoFailure(format!(
            "generated subalgebras have dimensions {dim} and {rank_b}"
        )));
    }

    let map = if dim == a.dim() && dim == b.dim() {
        let ma = Matrix::from_cols(&basis_a);
        let mb = Matrix::from_cols(&basis_b);
        let inv = ma
            .inverse()
            .ok_or_else(|| AlgebraError::IsoFailure("closure basis not invertible".into()))?;
        Some(mb.mul_mat(&inv))
    } else {
        None
    };

    let kept: Vec<String> = basis_idx.iter().map(|&i| words[i].clone()).collect();
    Ok(IsoWitness {
        dim,
        words: kept,
        basis_from: basis_a,
        basis_to: basis_b,
        map,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Frac, RingSpec};

    fn idempotent_pair() -> AlgebraTable {
        let mut t = AlgebraTable::new(
            "pair",
            RingSpec::rational(),
            vec!["a0".into(), "a1".into()],
            Frac::rat(1, 4),
            Frac::rat(1, 32),
        );
        t.set_product(0, 0, Element::unit(2, 0));
        t.set_product(1, 1, Element::unit(2, 1));
        t.set_product(0, 1, Element::zero(2));
        t
    }

    #[test]
    fn identity_map_is_a_witness() {
        let t = idempotent_pair();
        let w = generated_isomorphism(
            &t,
            &t,
            &GenMap {
                from: ("a0".into(), "a1".into()),
                to: ("a0".into(), "a1".into()),
            },
        )
        .unwrap();
        assert_eq!(w.dim, 2);
        assert_eq!(w.map.unwrap(), Matrix::identity(2));
    }

    #[test]
    fn conflicting_structure_fails() {
        let t = idempotent_pair();
        let mut u = idempotent_pair();
        // u has a0*a1 = a0 instead of 0
        u.set_product(0, 1, Element::unit(2, 0));
        let r = generated_isomorphism(
            &t,
            &u,
            &GenMap {
                from: ("a0".into(), "a1".into()),
                to: ("a0".into(), "a1".into()),
            },
        );
        assert!(r.is_err());
    }
}
