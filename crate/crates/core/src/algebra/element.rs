//! Coefficient vectors over the exact field.

use crate::exact::Frac;
use std::fmt;
use std::ops::{Index, IndexMut};

/// An element of a finite-dimensional algebra: coefficients indexed by basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub coeffs: Vec<Frac>,
}

impl Element {
    pub fn zero(dim: usize) -> Element {
        Element {
            coeffs: vec![Frac::zero(); dim],
        }
    }

    pub fn unit(dim: usize, i: usize) -> Element {
        let mut e = Element::zero(dim);
        e.coeffs[i] = Frac::one();
        e
    }

    pub fn from_coeffs(coeffs: Vec<Frac>) -> Element {
        Element { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Frac::is_zero)
    }

    pub fn scale(&self, c: &Frac) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn add_ref(&self, other: &Element) -> Element {
        debug_assert_eq!(self.dim(), other.dim());
        Element {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn sub_ref(&self, other: &Element) -> Element {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(Frac::neg).collect(),
        }
    }

    pub fn add_scaled(&self, c: &Frac, other: &Element) -> Element {
        self.add_ref(&other.scale(c))
    }

    /// Applies the ring substitution to every coefficient.
    pub fn substitute(
        &self,
        assign: &std::collections::BTreeMap<crate::exact::Var, Frac>,
    ) -> Result<Element, crate::exact::ExactError> {
        let mut coeffs = Vec::with_capacity(self.dim());
        for c in &self.coeffs {
            coeffs.push(c.substitute(assign)?);
        }
        Ok(Element { coeffs })
    }

    pub fn flip_ring(&self) -> Element {
        Element {
            coeffs: self.coeffs.iter().map(Frac::flip).collect(),
        }
    }

    /// Renders as a linear combination of the given labels.
    pub fn display_with(&self, labels: &[String]) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .zip(labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| format!("({})*{}", c, l))
            .collect();
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        }
    }
}

impl Index<usize> for Element {
    type Output = Frac;
    fn index(&self, i: usize) -> &Frac {
        &self.coeffs[i]
    }
}

impl IndexMut<usize> for Element {
    fn index_mut(&mut self, i: usize) -> &mut Frac {
        &mut self.coeffs[i]
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
