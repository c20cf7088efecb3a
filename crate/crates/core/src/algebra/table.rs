//! Multiplication-table presentation of a commutative nonassociative
//! algebra over the exact field.

use super::element::Element;
use super::matrix::Matrix;
use super::AlgebraError;
use crate::exact::{Frac, Poly, RingSpec, Var};
use std::collections::BTreeMap;

/// Unordered-pair key: commutativity is structural.
fn pair(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraTable {
    pub name: String,
    pub ring: RingSpec,
    pub basis: Vec<String>,
    products: BTreeMap<(usize, usize), Element>,
    pub form: Option<BTreeMap<(usize, usize), Frac>>,
    pub validity_nonzero: Vec<Poly>,
    pub fusion_alpha: Frac,
    pub fusion_beta: Frac,
}

impl AlgebraTable {
    pub fn new(
        name: impl Into<String>,
        ring: RingSpec,
        basis: Vec<String>,
        fusion_alpha: Frac,
        fusion_beta: Frac,
    ) -> AlgebraTable {
        AlgebraTable {
            name: name.into(),
            ring,
            basis,
            products: BTreeMap::new(),
            form: None,
            validity_nonzero: Vec::new(),
            fusion_alpha,
            fusion_beta,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, label: &str) -> Result<usize, AlgebraError> {
        self.basis
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AlgebraError::NoSuchLabel(label.to_string()))
    }

    pub fn basis_element(&self, i: usize) -> Element {
        Element::unit(self.dim(), i)
    }

    pub fn element_by_label(&self, label: &str) -> Result<Element, AlgebraError> {
        Ok(self.basis_element(self.index_of(label)?))
    }

    pub fn set_product(&mut self, i: usize, j: usize, value: Element) {
        assert_eq!(value.dim(), self.dim());
        self.products.insert(pair(i, j), value);
    }

    pub fn set_product_labels(
        &mut self,
        a: &str,
        b: &str,
        value: Element,
    ) -> Result<(), AlgebraError> {
        let i = self.index_of(a)?;
        let j = self.index_of(b)?;
        self.set_product(i, j, value);
        Ok(())
    }

    pub fn product(&self, i: usize, j: usize) -> Result<&Element, AlgebraError> {
        self.products.get(&pair(i, j)).ok_or_else(|| {
            AlgebraError::MissingProduct(self.basis[i].clone(), self.basis[j].clone())
        })
    }

    pub fn products(&self) -> impl Iterator<Item = (&(usize, usize), &Element)> {
        self.products.iter()
    }

    /// All unordered pairs present; a complete table has `n(n+1)/2` of them.
    pub fn is_complete(&self) -> bool {
        let n = self.dim();
        self.products.len() == n * (n + 1) / 2
    }

    pub fn set_form_pair(&mut self, i: usize, j: usize, value: Frac) {
        self.form
            .get_or_insert_with(BTreeMap::new)
            .insert(pair(i, j), value);
    }

    pub fn form_entry(&self, i: usize, j: usize) -> Result<&Frac, AlgebraError> {
        self.form
            .as_ref()
            .and_then(|f| f.get(&pair(i, j)))
            .ok_or_else(|| AlgebraError::NoForm(self.name.clone()))
    }

    /// Bilinear extension of the stored form.
    pub fn form_pairing(&self, x: &Element, y: &Element) -> Result<Frac, AlgebraError> {
        let mut acc = Frac::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if y[j].is_zero() {
                    continue;
                }
                let g = self.form_entry(i, j)?;
                acc = acc.add(&x[i].mul(&y[j]).mul(g));
            }
        }
        Ok(acc)
    }

    /// Bilinear extension of the multiplication table.
    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        if x.dim() != self.dim() || y.dim() != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: x.dim().max(y.dim()),
            });
        }
        let mut acc = Element::zero(self.dim());
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                acc = acc.add_ref(&self.product(i, j)?.scale(&c));
            }
        }
        Ok(acc)
    }

    /// The (left-)adjoint map `x -> ax` as a matrix: column `j` is
    /// `a * basis_j`.
    pub fn ad_matrix(&self, a: &Element) -> Result<Matrix, AlgebraError> {
        let cols: Result<Vec<Element>, _> = (0..self.dim())
            .map(|j| self.multiply(a, &self.basis_element(j)))
            .collect();
        Ok(Matrix::from_cols(&cols?))
    }

    /// Entry-wise substitution, refusing assignments that violate the
    /// validity polynomials or the ring's multiplicative set.
    pub fn specialize(
        &self,
        assign: &BTreeMap<Var, Frac>,
    ) -> Result<AlgebraTable, AlgebraError> {
        for p in self.validity_nonzero.iter().chain(self.ring.inverted.iter()) {
            if p.substitute(assign).is_zero() {
                return Err(AlgebraError::ValidityViolation(p.clone()));
            }
        }
        let ring = self.ring.specialize(assign)?;
        let mut out = AlgebraTable {
            name: self.name.clone(),
            ring,
            basis: self.basis.clone(),
            products: BTreeMap::new(),
            form: None,
            validity_nonzero: self
                .validity_nonzero
                .iter()
                .filter_map(|p| {
                    let f = p.substitute(assign);
                    if f.is_constant() {
                        None
                    } else {
                        Some(f.num().clone())
                    }
                })
                .collect(),
            fusion_alpha: self.fusion_alpha.substitute(assign)?,
            fusion_beta: self.fusion_beta.substitute(assign)?,
        };
        for (k, v) in &self.products {
            out.products.insert(*k, v.substitute(assign)?);
        }
        if let Some(form) = &self.form {
            let mut nf = BTreeMap::new();
            for (k, v) in form {
                nf.insert(*k, v.substitute(assign)?);
            }
            out.form = Some(nf);
        }
        Ok(out)
    }

    /// True iff `M` is invertible and `M(xy) = (Mx)(My)` on all basis pairs.
    pub fn is_automorphism(&self, m: &Matrix) -> Result<bool, AlgebraError> {
        Ok(self.automorphism_witness(m)?.is_none())
    }

    /// `None` when `M` is an automorphism; otherwise a witnessing basis pair
    /// (or `(dim, dim)` for non-invertibility).
    pub fn automorphism_witness(
        &self,
        m: &Matrix,
    ) -> Result<Option<(usize, usize)>, AlgebraError> {
        if !m.is_square() || m.rows != self.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.dim(),
                got: m.rows,
            });
        }
        if m.inverse().is_none() {
            return Ok(Some((self.dim(), self.dim())));
        }
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let lhs = m.mul_vec(self.product(i, j)?);
                let rhs = self.multiply(&m.col(i), &m.col(j))?;
                if lhs != rhs {
                    return Ok(Some((i, j)));
                }
            }
        }
        Ok(None)
    }

    /// Smallest multiplication-closed subspace containing `vectors`.
    pub fn ideal_closure(&self, vectors: &[Element]) -> Result<Vec<Element>, AlgebraError> {
        let mut basis: Vec<Element> = Vec::new();
        let mut queue: Vec<Element> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if Matrix::coordinates_in_span(&basis, &v).is_some() {
                continue;
            }
            basis.push(v.clone());
            for j in 0..self.dim() {
                queue.push(self.multiply(&v, &self.basis_element(j))?);
            }
        }
        Ok(basis)
    }

    /// Quotient by the ideal generated by `vectors`. Surviving coordinates
    /// keep their basis labels; returns the quotient together with the
    /// projection matrix (quotient-dim x dim).
    pub fn quotient_by_ideal(
        &self,
        vectors: &[Element],
    ) -> Result<(AlgebraTable, Matrix), AlgebraError> {
        let ideal = self.ideal_closure(vectors)?;
        if ideal.is_empty() {
            let mut out = self.clone();
            out.form = None;
            return Ok((out, Matrix::identity(self.dim())));
        }
        let rows: Vec<Vec<Frac>> = ideal.iter().map(|v| v.coeffs.clone()).collect();
        let (r, pivots) = Matrix::from_rows(rows).rref();
        let survivors: Vec<usize> = (0..self.dim()).filter(|c| !pivots.contains(c)).collect();
        // projection: kill each pivot coordinate using its rref row
        let mut proj = Matrix::zero(survivors.len(), self.dim());
        for (qi, &c) in survivors.iter().enumerate() {
            proj.set(qi, c, Frac::one());
        }
        for (prow, &pcol) in pivots.iter().enumerate() {
            // basis vector e_{pcol} maps to -sum over survivors of rref row entries
            for (qi, &c) in survivors.iter().enumerate() {
                let v = proj.get(qi, pcol).sub(r.get(prow, c));
                proj.set(qi, pcol, v);
            }
        }
        let mut out = AlgebraTable::new(
            format!("{}/ideal", self.name),
            self.ring.clone(),
            survivors.iter().map(|&c| self.basis[c].clone()).collect(),
            self.fusion_alpha.clone(),
            self.fusion_beta.clone(),
        );
        out.validity_nonzero = self.validity_nonzero.clone();
        for (qi, &ci) in survivors.iter().enumerate() {
            for (qj, &cj) in survivors.iter().enumerate().skip(qi) {
                let p = self.product(ci, cj)?;
                out.set_product(qi, qj, proj.mul_vec(p));
            }
        }
        Ok((out, proj))
    }

    /// Verifies that the product of every pair of listed vectors stays in
    /// their span; i.e. the span is multiplication-invariant as stated.
    pub fn span_is_ideal(&self, vectors: &[Element]) -> Result<bool, AlgebraError> {
        let closure = self.ideal_closure(vectors)?;
        let rows: Vec<Vec<Frac>> = vectors.iter().map(|v| v.coeffs.clone()).collect();
        Ok(closure.len() == Matrix::from_rows(rows).rank())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A tiny commutative table: 2-dimensional, e0 idempotent, e0*e1 = e1,
    /// e1*e1 = 0.
    fn toy() -> AlgebraTable {
        let mut t = AlgebraTable::new(
            "toy",
            RingSpec::rational(),
            vec!["e0".into(), "e1".into()],
            Frac::rat(1, 4),
            Frac::rat(1, 32),
        );
        t.set_product(0, 0, Element::unit(2, 0));
        t.set_product(0, 1, Element::unit(2, 1));
        t.set_product(1, 1, Element::zero(2));
        t
    }

    #[test]
    fn multiply_is_commutative_by_storage() {
        let t = toy();
        let x = Element::from_coeffs(vec![Frac::rat(1, 2), Frac::from_int(3)]);
        let y = Element::from_coeffs(vec![Frac::from_int(-1), Frac::rat(2, 5)]);
        assert_eq!(t.multiply(&x, &y).unwrap(), t.multiply(&y, &x).unwrap());
    }

    #[test]
    fn ad_matrix_columns() {
        let t = toy();
        let ad = t.ad_matrix(&Element::unit(2, 0)).unwrap();
        assert_eq!(ad, Matrix::identity(2));
        let zero = t.ad_matrix(&Element::zero(2)).unwrap();
        assert_eq!(zero, Matrix::zero(2, 2));
    }

    #[test]
    fn quotient_kills_ideal() {
        let t = toy();
        // e1 spans an ideal (e0*e1 = e1, e1*e1 = 0)
        let (q, proj) = t.quotient_by_ideal(&[Element::unit(2, 1)]).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.basis, vec!["e0".to_string()]);
        assert!(proj.mul_vec(&Element::unit(2, 1)).is_zero());
        assert_eq!(*q.product(0, 0).unwrap(), Element::unit(1, 0));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let t = toy();
        let bad = Element::zero(3);
        assert!(matches!(
            t.multiply(&bad, &bad),
            Err(AlgebraError::DimensionMismatch { .. })
        ));
    }
}
