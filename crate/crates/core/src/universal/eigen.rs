//! Eigenvectors of `ad(a_0)` in the universal span, with the verification
//! that each one has the stated eigenvalue.

use super::build::UniversalAlgebra;
use super::span::*;
use crate::algebra::Element;
use crate::exact::{Frac, Var};

/// The `a_0`-relative eigenvectors: `z, zz, z_2` in the 0-eigenspace,
/// `x, x_2` in the `al`-eigenspace, `y, y_2` in the `bt`-eigenspace.
#[derive(Debug, Clone)]
pub struct Eigenvectors {
    pub z: Element,
    pub zz: Element,
    pub z2: Element,
    pub x: Element,
    pub x2: Element,
    pub y: Element,
    pub y2: Element,
}

/// `z`-type vector for the pair `(a_k, a_-k)` at coefficient `lam`:
/// `((1-al)lam - bt) a_0 + 1/2(al-bt)(a_k + a_-k) - s_k`.
pub fn zero_eigenvector(k: usize, mirror: usize, stype: usize, lam: &Frac) -> Element {
    let al = Frac::var(Var::Al);
    let bt = Frac::var(Var::Bt);
    let mut e = Element::zero(DIM);
    e[A0] = Frac::one().sub(&al).mul(lam).sub(&bt);
    let half = al.sub(&bt).scale_rat(&crate::exact::rat(1, 2));
    e[k] = half.clone();
    e[mirror] = half;
    e[stype] = Frac::from_int(-1);
    e
}

/// `x`-type vector: `(bt - lam) a_0 + 1/2 bt (a_k + a_-k) + s_k`.
pub fn alpha_eigenvector(k: usize, mirror: usize, stype: usize, lam: &Frac) -> Element {
    let bt = Frac::var(Var::Bt);
    let mut e = Element::zero(DIM);
    e[A0] = bt.sub(lam);
    let half = bt.scale_rat(&crate::exact::rat(1, 2));
    e[k] = half.clone();
    e[mirror] = half;
    e[stype] = Frac::one();
    e
}

impl UniversalAlgebra {
    /// Builds the seven eigenvectors and checks each against `ad(a_0)`;
    /// `zz` is additionally `z * z` by construction.
    pub fn eigenvectors(&self) -> Result<Eigenvectors, String> {
        let lm1 = Frac::var(Var::Lm1);
        let lm2 = Frac::var(Var::Lm2);
        let z = zero_eigenvector(A1, AM1, S, &lm1);
        let z2 = zero_eigenvector(A2, AM2, S2, &lm2);
        let x = alpha_eigenvector(A1, AM1, S, &lm1);
        let x2 = alpha_eigenvector(A2, AM2, S2, &lm2);
        let y = unit(A1).sub_ref(&unit(AM1));
        let y2 = unit(A2).sub_ref(&unit(AM2));
        let zz = self.table.multiply(&z, &z).map_err(|e| e.to_string())?;

        let a0 = unit(A0);
        let al = Frac::var(Var::Al);
        let bt = Frac::var(Var::Bt);
        let checks: [(&Element, Frac, &str); 6] = [
            (&z, Frac::zero(), "z"),
            (&z2, Frac::zero(), "z2"),
            (&x, al.clone(), "x"),
            (&x2, al, "x2"),
            (&y, bt.clone(), "y"),
            (&y2, bt, "y2"),
        ];
        for (v, eig, name) in checks {
            let lhs = self.table.multiply(&a0, v).map_err(|e| e.to_string())?;
            if lhs != v.scale(&eig) {
                return Err(format!("{name} is not an eigenvector of eigenvalue {eig}"));
            }
        }
        Ok(Eigenvectors {
            z,
            zz,
            z2,
            x,
            x2,
            y,
            y2,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::build::universal;
    use super::super::closed_forms;

    #[test]
    fn eigenvectors_verify() {
        let u = universal();
        let e = u.eigenvectors().unwrap();
        assert!(!e.zz.is_zero());
    }

    #[test]
    fn zz_matches_closed_form() {
        let u = universal();
        let e = u.eigenvectors().unwrap();
        assert_eq!(e.zz, closed_forms::zz_printed());
    }
}
