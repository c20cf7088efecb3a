//! Declaration of the coefficient ring a table lives over: which variables
//! occur, which polynomials are inverted (and so must stay nonzero), and
//! which polynomial constraints are imposed.

use super::frac::Frac;
use super::poly::Poly;
use super::vars::Var;
use super::ExactError;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RingSpec {
    /// Ordered subset of the six variables that remain symbolic.
    pub variables: Vec<Var>,
    /// Members of the multiplicative set: must evaluate nonzero.
    pub inverted: Vec<Poly>,
    /// Polynomials that vanish identically on this ring (e.g. a branch
    /// relation already substituted into the table).
    pub constraints: Vec<Poly>,
}

impl RingSpec {
    pub fn rational() -> RingSpec {
        RingSpec::default()
    }

    pub fn new(variables: Vec<Var>, inverted: Vec<Poly>, constraints: Vec<Poly>) -> RingSpec {
        debug_assert!(inverted.iter().all(|p| !p.is_zero()));
        RingSpec {
            variables,
            inverted,
            constraints,
        }
    }

    /// Checks that an assignment keeps every inverted polynomial nonzero.
    /// Returns the first violated polynomial otherwise.
    pub fn check_invertible(&self, assign: &BTreeMap<Var, Frac>) -> Result<(), Poly> {
        for p in &self.inverted {
            match p.substitute(assign) {
                f if f.is_zero() => return Err(p.clone()),
                _ => {}
            }
        }
        Ok(())
    }

    /// Ring spec after substituting some variables away.
    pub fn specialize(&self, assign: &BTreeMap<Var, Frac>) -> Result<RingSpec, ExactError> {
        let variables = self
            .variables
            .iter()
            .copied()
            .filter(|v| !assign.contains_key(v))
            .collect();
        let mut inverted = Vec::new();
        for p in &self.inverted {
            let f = p.substitute(assign);
            if f.is_zero() {
                return Err(ExactError::Pole(p.to_string()));
            }
            if !f.is_constant() {
                inverted.push(f.num().clone());
            }
        }
        let mut constraints = Vec::new();
        for p in &self.constraints {
            let f = p.substitute(assign);
            if !f.is_zero() {
                constraints.push(f.num().clone());
            }
        }
        Ok(RingSpec {
            variables,
            inverted,
            constraints,
        })
    }
}
