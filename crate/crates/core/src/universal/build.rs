//! Derivation of the universal multiplication table.
//!
//! Everything is computed from the axis axioms for the two generators and
//! the stated derivation procedure; the classical displayed formulas are
//! used only as test oracles. The derivation order keeps every fusion
//! solve linear in a single unknown product:
//!
//! 1. definitional products (idempotents, distance <= 2 pairs),
//! 2. `a_0 s`, `a_1 s`, `a_0 s_2` from `a(a(ax))`-reduction,
//! 3. `ss` computed with respect to both generators; equating the two
//!    expressions solves for the expansion of `a_3`,
//! 4. `a_-3 = tau(a_0) a_3`, `a_4 = f(a_-3)`, the full `tau(a_1)` and flip
//!    actions on the span,
//! 5. orbit transports of `a_i s`, `a_i s_2`,
//! 6. `a_0 s_2^f` from the fusion rule `0 * 0 = {0}` on `(a_1)_0`,
//! 7. remaining transports and the distance-3/4 axis products,
//! 8. `s s_2` and `s_2 s_2` from single-unknown fusion relations, their
//!    flips, and `s_2 s_2^f` from `a_3 a_3 = a_3`.

use super::span::*;
use crate::algebra::{AlgebraTable, Element, Matrix};
use crate::exact::{Frac, RingSpec, Var};
use crate::exact::parse_poly;
use std::collections::BTreeMap;
use std::sync::OnceLock;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Printed,
    OrbitTransported,
    FusionDerived,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Printed => "printed",
            Provenance::OrbitTransported => "orbit-transported",
            Provenance::FusionDerived => "fusion-derived",
        }
    }
}

/// Unnormalized fraction accumulator: sums `num/den` pairs, canceling only
/// when one denominator divides the other, and normalizes once at the end.
/// This keeps the bilinear table expansions from paying a gcd per term.
struct RawAccum {
    num: crate::exact::Poly,
    den: crate::exact::Poly,
}

impl RawAccum {
    fn zero() -> RawAccum {
        RawAccum {
            num: crate::exact::Poly::zero(),
            den: crate::exact::Poly::one(),
        }
    }

    /// Adds the product of two fractions without normalizing it first.
    fn add_product(&mut self, a: &Frac, b: &Frac) {
        let n = a.num().mul_ref(b.num());
        if n.is_zero() {
            return;
        }
        let d = a.den().mul_ref(b.den());
        if self.num.is_zero() {
            self.num = n;
            self.den = d;
            return;
        }
        if self.den == d {
            self.num = self.num.add_ref(&n);
        } else if let Some(q) = d.div_exact(&self.den) {
            // self.den | d
            self.num = self.num.mul_ref(&q).add_ref(&n);
            self.den = d;
        } else if let Some(q) = self.den.div_exact(&d) {
            self.num = self.num.add_ref(&n.mul_ref(&q));
        } else {
            self.num = self.num.mul_ref(&d).add_ref(&n.mul_ref(&self.den));
            self.den = self.den.mul_ref(&d);
        }
    }

    fn finish(self) -> Frac {
        Frac::new(self.num, self.den).expect("nonzero denominator")
    }
}

/// Element of the span extended by a formal `a_3` coordinate, used while
/// the expansion of `a_3` is still unknown.
#[derive(Debug, Clone, PartialEq)]
struct Ext {
    b: Element,
    a3: Frac,
}

impl Ext {
    fn from(b: Element) -> Ext {
        Ext {
            b,
            a3: Frac::zero(),
        }
    }

    fn add(&self, o: &Ext) -> Ext {
        Ext {
            b: self.b.add_ref(&o.b),
            a3: self.a3.add(&o.a3),
        }
    }

    fn sub(&self, o: &Ext) -> Ext {
        Ext {
            b: self.b.sub_ref(&o.b),
            a3: self.a3.sub(&o.a3),
        }
    }

    fn scale(&self, c: &Frac) -> Ext {
        Ext {
            b: self.b.scale(c),
            a3: self.a3.mul(c),
        }
    }
}

#[derive(Debug, Clone)]
pub struct UniversalAlgebra {
    pub table: AlgebraTable,
    pub provenance: BTreeMap<(usize, usize), Provenance>,
    /// Expansion of `a_3` in the span.
    pub a3: Element,
    /// Expansion of `a_4 = a_-2^(tau(a_1))` in the span.
    pub a4: Element,
    /// `tau(a_0)` as a matrix on the span.
    pub tau0: Matrix,
    /// `tau(a_1)` as a matrix on the span.
    pub tau1: Matrix,
    /// Images of the basis under the flip (semilinear over the ring flip).
    flip_images: Vec<Element>,
}

struct Builder {
    products: BTreeMap<(usize, usize), Element>,
    provenance: BTreeMap<(usize, usize), Provenance>,
    al: Frac,
    bt: Frac,
    lm1: Frac,
    lm1f: Frac,
    lm2: Frac,
    lm2f: Frac,
}

fn key(i: usize, j: usize) -> (usize, usize) {
    if i <= j {
        (i, j)
    } else {
        (j, i)
    }
}

impl Builder {
    fn new() -> Builder {
        Builder {
            products: BTreeMap::new(),
            provenance: BTreeMap::new(),
            al: Frac::var(Var::Al),
            bt: Frac::var(Var::Bt),
            lm1: Frac::var(Var::Lm1),
            lm1f: Frac::var(Var::Lm1f),
            lm2: Frac::var(Var::Lm2),
            lm2f: Frac::var(Var::Lm2f),
        }
    }

    fn set(&mut self, i: usize, j: usize, v: Element, p: Provenance) {
        let k = key(i, j);
        assert!(
            !self.products.contains_key(&k),
            "product {i},{j} set twice"
        );
        self.products.insert(k, v);
        self.provenance.insert(k, p);
    }

    fn product(&self, i: usize, j: usize) -> &Element {
        self.products
            .get(&key(i, j))
            .unwrap_or_else(|| panic!("product {}*{} not yet derived", LABELS[i], LABELS[j]))
    }

    fn mult(&self, x: &Element, y: &Element) -> Element {
        let mut acc: Vec<RawAccum> = (0..DIM).map(|_| RawAccum::zero()).collect();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                let entry = self.product(i, j);
                for (k, slot) in acc.iter_mut().enumerate() {
                    if !entry[k].is_zero() {
                        slot.add_product(&c, &entry[k]);
                    }
                }
            }
        }
        Element::from_coeffs(acc.into_iter().map(RawAccum::finish).collect())
    }

    /// Bilinear expansion tracking the single still-unknown pair: returns
    /// the known part and the total coefficient of the missing product.
    fn mult_with_unknown(
        &self,
        x: &Element,
        y: &Element,
        missing: (usize, usize),
    ) -> (Element, Frac) {
        let mk = key(missing.0, missing.1);
        let mut acc: Vec<RawAccum> = (0..DIM).map(|_| RawAccum::zero()).collect();
        let mut unknown = Frac::zero();
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..DIM {
                if y[j].is_zero() {
                    continue;
                }
                let c = x[i].mul(&y[j]);
                if key(i, j) == mk {
                    unknown = unknown.add(&c);
                } else {
                    let entry = self.product(i, j);
                    for (k, slot) in acc.iter_mut().enumerate() {
                        if !entry[k].is_zero() {
                            slot.add_product(&c, &entry[k]);
                        }
                    }
                }
            }
        }
        (
            Element::from_coeffs(acc.into_iter().map(RawAccum::finish).collect()),
            unknown,
        )
    }

    /// `x o y = xy - bt(x + y)`.
    fn circ(&self, x: &Element, y: &Element) -> Element {
        self.mult(x, y)
            .sub_ref(&x.add_ref(y).scale(&self.bt))
    }

    /// `lambda^a(a o x) = lambda^a(x)(1 - bt) - bt`: the 1-part of
    /// `a o x = ax - bt(a + x)` loses `bt(1 + lambda)` against `ax`.
    fn lam_circ(&self, lam_x: &Frac) -> Frac {
        lam_x.mul(&Frac::one().sub(&self.bt)).sub(&self.bt)
    }

    /// `lambda^{a_0}` on elements without an `s_2^f` component (two-sided
    /// products with `a_0` of such elements are determined early).
    fn lam0(&self, x: &Element) -> Frac {
        assert!(x[S2F].is_zero(), "lambda^a0(s2f) not available yet");
        let vals = [
            self.lm2.clone(),
            self.lm1.clone(),
            Frac::one(),
            self.lm1.clone(),
            self.lm2.clone(),
            self.lam_circ(&self.lm1),
            self.lam_circ(&self.lm2),
            Frac::zero(),
        ];
        let mut acc = Frac::zero();
        for i in 0..DIM {
            acc = acc.add(&x[i].mul(&vals[i]));
        }
        acc
    }

    /// `lambda^{a_1}`; defined on elements supported away from `a_-2`, `s_2`.
    fn lam1(&self, x: &Element) -> Frac {
        assert!(x[AM2].is_zero() && x[S2].is_zero());
        let vals = [
            Frac::zero(),
            self.lm2f.clone(),
            self.lm1f.clone(),
            Frac::one(),
            self.lm1f.clone(),
            self.lam_circ(&self.lm1f),
            Frac::zero(),
            self.lam_circ(&self.lm2f),
        ];
        let mut acc = Frac::zero();
        for i in 0..DIM {
            acc = acc.add(&x[i].mul(&vals[i]));
        }
        acc
    }

    /// `a(a x) = lambda^a(x)(1 - al) a + al (a x) + bt(bt - al) x_bt`,
    /// where `x_bt` is the projection onto the `bt`-eigenspace of `a`.
    fn a_sq_x(&self, a: &Element, ax: &Element, lam_x: &Frac, x_beta: &Element) -> Element {
        let al = &self.al;
        let bt = &self.bt;
        a.scale(&lam_x.mul(&Frac::one().sub(al)))
            .add_ref(&ax.scale(al))
            .add_ref(&x_beta.scale(&bt.mul(&bt.sub(al))))
    }

    /// Definitional products: idempotent axes and the distance <= 2 pairs
    /// through `s`, `s_2`, `s_2^f`.
    fn init_definitional(&mut self) {
        let bt = self.bt.clone();
        for i in [AM2, AM1, A0, A1, A2] {
            self.set(i, i, unit(i), Provenance::Printed);
        }
        // distance 1: a_i a_{i+1} = s + bt(a_i + a_{i+1})
        for (i, j) in [(AM2, AM1), (AM1, A0), (A0, A1), (A1, A2)] {
            let v = unit(S).add_ref(&unit(i).add_ref(&unit(j)).scale(&bt));
            self.set(i, j, v, Provenance::Printed);
        }
        // distance 2, even index through s_2, odd through s_2^f
        for (i, j, stype) in [(AM2, A0, S2), (A0, A2, S2), (AM1, A1, S2F)] {
            let v = unit(stype).add_ref(&unit(i).add_ref(&unit(j)).scale(&bt));
            self.set(i, j, v, Provenance::Printed);
        }
    }

    /// `a_0 s`, `a_1 s`, `a_0 s_2` from `a (a o x) = a(ax) - bt(a + ax)`.
    fn derive_axis_s_products(&mut self) {
        let bt = self.bt.clone();
        let a0 = unit(A0);
        let a1 = unit(A1);
        let a2 = unit(A2);

        // a_0 s with x = a_1
        let ax = self.product(A0, A1).clone();
        let x_beta = unit(A1).sub_ref(&unit(AM1)).scale(&Frac::rat(1, 2));
        let aax = self.a_sq_x(&a0, &ax, &self.lm1.clone(), &x_beta);
        let a0s = aax.sub_ref(&a0.add_ref(&ax).scale(&bt));
        self.set(A0, S, a0s, Provenance::Printed);

        // a_0 s_2 with x = a_2
        let ax = self.product(A0, A2).clone();
        let x_beta = unit(A2).sub_ref(&unit(AM2)).scale(&Frac::rat(1, 2));
        let aax = self.a_sq_x(&a0, &ax, &self.lm2.clone(), &x_beta);
        let a0s2 = aax.sub_ref(&a0.add_ref(&ax).scale(&bt));
        self.set(A0, S2, a0s2, Provenance::Printed);

        // a_1 s with x = a_0, relative to the axis a_1
        let ax = self.product(A1, A0).clone();
        let x_beta = unit(A0).sub_ref(&a2).scale(&Frac::rat(1, 2));
        let aax = self.a_sq_x(&a1, &ax, &self.lm1f.clone(), &x_beta);
        let a1s = aax.sub_ref(&a1.add_ref(&ax).scale(&bt));
        self.set(A1, S, a1s, Provenance::Printed);
    }

    /// `tau(a_1)` before its full matrix exists: acts on elements supported
    /// on `{a_-1, a_0, a_1, a_2, s, s_2}`, sending `a_-1` to the formal
    /// `a_3` coordinate.
    fn tau1_early(&self, x: &Element) -> Ext {
        assert!(x[AM2].is_zero() && x[S2F].is_zero());
        let mut b = Element::zero(DIM);
        b[A2] = x[A0].clone();
        b[A0] = x[A2].clone();
        b[A1] = x[A1].clone();
        b[S] = x[S].clone();
        b[S2] = x[S2].clone();
        Ext {
            b,
            a3: x[AM1].clone(),
        }
    }

    /// `(a o x)(a o x)` for a generator axis `a` and adjacent generator
    /// `x`, expanded with the fusion projections relative to `a`. With
    /// `(a, x) = (a_0, a_1)` this is `ss` in the span; with `(a_1, a_0)` it
    /// is `ss` carrying a formal `a_3` contribution.
    fn ss_wrt(&self, axis: usize) -> Ext {
        let al = &self.al;
        let bt = &self.bt;
        let half = Frac::rat(1, 2);
        let (a, x, mu, x_beta, tau_of): (Element, Element, Frac, Element, bool) = if axis == A0 {
            (
                unit(A0),
                unit(A1),
                self.lm1.clone(),
                unit(A1).sub_ref(&unit(AM1)).scale(&half),
                false,
            )
        } else {
            (
                unit(A1),
                unit(A0),
                self.lm1f.clone(),
                unit(A0).sub_ref(&unit(A2)).scale(&half),
                true,
            )
        };
        let x_plus = x.sub_ref(&x_beta);
        let s = unit(S);
        // x_al = (1/al)(s + (bt - mu) a + bt x_plus)
        let x_al = s
            .add_ref(&a.scale(&bt.sub(&mu)))
            .add_ref(&x_plus.scale(bt))
            .scale(&al.inv().unwrap());
        // w = x *_a x = 2 s x
        let w = self.mult(&s, &x).scale(&Frac::from_int(2));
        let tau_w = if tau_of {
            self.tau1_early(&w)
        } else {
            Ext::from(tau0_apply(&w))
        };
        let w_ext = Ext::from(w.clone());
        let w_beta = w_ext.sub(&tau_w).scale(&half);
        let w_plus = w_ext.sub(&w_beta);
        let lam_w = if axis == A0 {
            self.lam0(&w)
        } else {
            self.lam1(&w)
        };
        let aw = self.mult(&a, &w);
        // w_al = (1/al)(a w - lam(w) a - bt w_beta)
        let w_al = Ext::from(aw.sub_ref(&a.scale(&lam_w)))
            .sub(&w_beta.scale(bt))
            .scale(&al.inv().unwrap());
        // x_+ x_+ = 1/2 (x o x^tau) + (1/2 + bt) x_+
        let x_tau = if axis == A0 { unit(AM1) } else { unit(A2) };
        let xpxp = Ext::from(
            self.circ(&x, &x_tau)
                .scale(&half)
                .add_ref(&x_plus.scale(&half.add(bt))),
        );

        // (a o x)(a o x) =
        //     (al/2 - bt)(x *_a x)_+ + bt(al - bt) x_+ x_+
        //   + (mu^2(1 - al) + mu(al - 2)bt + bt^2) a
        //   + 2 al^2 (1 + bt/(al - 2bt))(mu - bt) x_al
        //   - al^2/(2(al - 2bt)) (x *_a x)_al
        let c1 = al.mul(&half).sub(bt);
        let c2 = bt.mul(&al.sub(bt));
        let c3 = mu
            .mul(&mu)
            .mul(&Frac::one().sub(al))
            .add(&mu.mul(&al.sub(&Frac::from_int(2))).mul(bt))
            .add(&bt.mul(bt));
        let al2bt = al.sub(&bt.scale_rat(&crate::exact::int(2)));
        let c4 = Frac::from_int(2)
            .mul(&al.mul(al))
            .mul(&Frac::one().add(&bt.div(&al2bt).unwrap()))
            .mul(&mu.sub(bt));
        let c5 = al.mul(al).div(&al2bt.scale_rat(&crate::exact::int(2))).unwrap();

        w_plus
            .scale(&c1)
            .add(&xpxp.scale(&c2))
            .add(&Ext::from(a.scale(&c3)))
            .add(&Ext::from(x_al.scale(&c4)))
            .sub(&w_al.scale(&c5))
    }

    /// Projections of an axis `a_k` (k = 1 or 2) relative to `a_0`:
    /// `(a_k)_0` and `(a_k)_al`.
    fn projections_wrt_a0(&self, k: usize) -> (Element, Element) {
        let al = &self.al;
        let bt = &self.bt;
        let half = Frac::rat(1, 2);
        let (x, mirror, lam, stype) = match k {
            A1 => (unit(A1), unit(AM1), self.lm1.clone(), S),
            A2 => (unit(A2), unit(AM2), self.lm2.clone(), S2),
            _ => panic!("projection only for a_1, a_2"),
        };
        let x_beta = x.sub_ref(&mirror).scale(&half);
        let x_plus = x.sub_ref(&x_beta);
        let x_al = unit(stype)
            .add_ref(&unit(A0).scale(&bt.sub(&lam)))
            .add_ref(&x_plus.scale(bt))
            .scale(&al.inv().unwrap());
        let x_one = unit(A0).scale(&lam);
        let x_zero = x.sub_ref(&x_one).sub_ref(&x_al).sub_ref(&x_beta);
        (x_zero, x_al)
    }

    fn build() -> UniversalAlgebra {
        let mut t_ = std::time::Instant::now();
        let mut b = Builder::new();
        b.init_definitional();
        b.derive_axis_s_products();

        t_ = trace_timer("defs", t_);
        // ss two ways; the difference is linear in the formal a_3.
        let ss0 = b.ss_wrt(A0);
        assert!(ss0.a3.is_zero());
        let ss1 = b.ss_wrt(A1);
        assert!(!ss1.a3.is_zero());
        let a3 = ss0.b.sub_ref(&ss1.b).scale(&ss1.a3.inv().unwrap());
        b.set(S, S, ss0.b.clone(), Provenance::Printed);

        t_ = trace_timer("ss+a3", t_);
        // a_-3 = tau(a_0) a_3, a_4 = f(a_-3)
        let am3 = tau0_apply(&a3);
        let flip_images: Vec<Element> = {
            let mut v = vec![Element::zero(DIM); DIM];
            v[AM2] = a3.clone();
            v[AM1] = unit(A2);
            v[A0] = unit(A1);
            v[A1] = unit(A0);
            v[A2] = unit(AM1);
            v[S] = unit(S);
            v[S2] = unit(S2F);
            v[S2F] = unit(S2);
            v
        };
        let flip_apply = |x: &Element| -> Element {
            let mut acc = Element::zero(DIM);
            for i in 0..DIM {
                if x[i].is_zero() {
                    continue;
                }
                acc = acc.add_ref(&flip_images[i].scale(&x[i].flip()));
            }
            acc
        };
        let a4 = flip_apply(&am3);

        // tau(a_1) on the span. From the expansion of a_3,
        //   s_2^f = (1/k0)(a_3 - a_-2 - rest) + s_2  with k0 = a_3|_{s_2^f},
        // so tau(a_1) s_2^f = (1/k0)(a_-1 - a_4 - tau(a_1) rest) + s_2.
        let k0 = a3[S2F].clone();
        let tau1 = {
            let mut cols = vec![Element::zero(DIM); DIM];
            cols[AM2] = a4.clone();
            cols[AM1] = a3.clone();
            cols[A0] = unit(A2);
            cols[A1] = unit(A1);
            cols[A2] = unit(A0);
            cols[S] = unit(S);
            cols[S2] = unit(S2);
            let mut rest = Element::zero(DIM);
            for i in [AM1, A0, A1, A2, S] {
                rest[i] = a3[i].clone();
            }
            // tau(a_1) of rest: a_-1 -> a_3, a_0 -> a_2, a_1 -> a_1, a_2 -> a_0, s -> s
            let tau_rest = a3
                .scale(&rest[AM1])
                .add_ref(&unit(A2).scale(&rest[A0]))
                .add_ref(&unit(A1).scale(&rest[A1]))
                .add_ref(&unit(A0).scale(&rest[A2]))
                .add_ref(&unit(S).scale(&rest[S]));
            cols[S2F] = unit(AM1)
                .sub_ref(&a4)
                .sub_ref(&tau_rest)
                .scale(&k0.inv().expect("a_3 has an s_2^f component"))
                .add_ref(&unit(S2));
            Matrix::from_cols(&cols)
        };
        assert_eq!(
            tau1.mul_mat(&tau1),
            Matrix::identity(DIM),
            "tau(a_1) must be an involution on the span"
        );

        let t1 = |x: &Element| tau1.mul_vec(x);

        t_ = trace_timer("tau1/flip", t_);
        // Orbit transports of a_i s and a_i s_2.
        let a0s = b.product(A0, S).clone();
        let a1s = b.product(A1, S).clone();
        let a0s2 = b.product(A0, S2).clone();
        let a2s = t1(&a0s);
        b.set(A2, S, a2s.clone(), Provenance::OrbitTransported);
        b.set(AM1, S, tau0_apply(&a1s), Provenance::OrbitTransported);
        b.set(AM2, S, tau0_apply(&a2s), Provenance::OrbitTransported);
        let a1s2f = flip_apply(&a0s2);
        b.set(A1, S2F, a1s2f.clone(), Provenance::OrbitTransported);
        b.set(AM1, S2F, tau0_apply(&a1s2f), Provenance::OrbitTransported);
        let a2s2 = t1(&a0s2);
        b.set(A2, S2, a2s2.clone(), Provenance::OrbitTransported);
        b.set(AM2, S2, tau0_apply(&a2s2), Provenance::OrbitTransported);

        t_ = trace_timer("transports1", t_);
        // a_0 s_2^f from the fusion rule 0 * 0 = {0}: a_0((a_1)_0 (a_1)_0) = 0.
        let (z10, _) = b.projections_wrt_a0(A1);
        let (u, us2f) = b.mult_with_unknown(&z10, &z10, (S2F, S2F));
        // u itself has no unknown product; the unknown enters via a_0 * u.
        assert!(us2f.is_zero());
        let (a0u, c) = b.mult_with_unknown(&unit(A0), &u, (A0, S2F));
        let a0s2f = a0u.scale(&c.inv().expect("s_2^f occurs in (a_1)_0^2").neg());
        b.set(A0, S2F, a0s2f.clone(), Provenance::FusionDerived);

        t_ = trace_timer("a0s2f", t_);
        // Remaining transports.
        let tau1_s2f = tau1.col(S2F);
        let a2s2f = t1(&b.mult(&unit(A0), &tau1_s2f));
        b.set(A2, S2F, a2s2f.clone(), Provenance::OrbitTransported);
        b.set(AM2, S2F, tau0_apply(&a2s2f), Provenance::OrbitTransported);
        let a1s2 = flip_apply(&a0s2f);
        b.set(A1, S2, a1s2.clone(), Provenance::OrbitTransported);
        b.set(AM1, S2, tau0_apply(&a1s2), Provenance::OrbitTransported);

        t_ = trace_timer("transports2", t_);
        // Distance-3 and distance-4 axis products via a_0 a_3 and a_0 a_4.
        let a0a3 = b.mult(&unit(A0), &a3);
        let am1a2 = t1(&a0a3);
        b.set(AM1, A2, am1a2.clone(), Provenance::OrbitTransported);
        b.set(AM2, A1, tau0_apply(&am1a2), Provenance::OrbitTransported);
        let a0a4 = b.mult(&unit(A0), &a4);
        b.set(AM2, A2, t1(&a0a4), Provenance::OrbitTransported);

        t_ = trace_timer("dist34", t_);
        // s s_2 from a_0((a_1)_0 (a_2)_al + (a_1)_0 (a_2)_0) = al (a_1)_0 (a_2)_al.
        let (z20, x2a) = b.projections_wrt_a0(A2);
        let (p1, c1) = b.mult_with_unknown(&z10, &x2a, (S, S2));
        let (p2, c2) = b.mult_with_unknown(&z10, &z20, (S, S2));
        assert!(c1.add(&c2).is_zero(), "s s_2 must cancel on the left side");
        let lhs = b.mult(&unit(A0), &p1.add_ref(&p2));
        // rhs = al (p1 + c1 [s s_2])
        let ss2 = lhs
            .sub_ref(&p1.scale(&b.al))
            .scale(&b.al.mul(&c1).inv().expect("single unknown"));
        b.set(S, S2, ss2.clone(), Provenance::FusionDerived);
        b.set(S, S2F, flip_apply(&ss2), Provenance::FusionDerived);

        t_ = trace_timer("ss2", t_);
        // s_2 s_2 from a_0((a_2)_0 (a_2)_al + (a_2)_0 (a_2)_0) = al (a_2)_0 (a_2)_al.
        let (q1, d1) = b.mult_with_unknown(&z20, &x2a, (S2, S2));
        let (q2, d2) = b.mult_with_unknown(&z20, &z20, (S2, S2));
        assert!(d1.add(&d2).is_zero(), "s_2 s_2 must cancel on the left side");
        let lhs = b.mult(&unit(A0), &q1.add_ref(&q2));
        let s2s2 = lhs
            .sub_ref(&q1.scale(&b.al))
            .scale(&b.al.mul(&d1).inv().expect("single unknown"));
        b.set(S2, S2, s2s2.clone(), Provenance::FusionDerived);
        b.set(S2F, S2F, flip_apply(&s2s2), Provenance::FusionDerived);

        t_ = trace_timer("s2s2", t_);
        // s_2 s_2^f from a_3 a_3 = a_3.
        let (e, c) = b.mult_with_unknown(&a3, &a3, (S2, S2F));
        let s2s2f = a3.sub_ref(&e).scale(&c.inv().expect("a_3 meets s_2 s_2^f"));
        b.set(S2, S2F, s2s2f, Provenance::FusionDerived);

        t_ = trace_timer("s2s2f", t_);
        // Assemble the table.
        let ring = RingSpec::new(
            vec![Var::Al, Var::Bt, Var::Lm1, Var::Lm1f, Var::Lm2, Var::Lm2f],
            ["al", "bt", "al-bt", "al-2*bt", "al-4*bt"]
                .iter()
                .map(|s| parse_poly(s).unwrap())
                .collect(),
            vec![],
        );
        let mut table = AlgebraTable::new(
            "universal",
            ring,
            labels(),
            Frac::var(Var::Al),
            Frac::var(Var::Bt),
        );
        table.validity_nonzero = ["al-1", "bt-1"]
            .iter()
            .map(|s| parse_poly(s).unwrap())
            .collect();
        for ((i, j), v) in &b.products {
            table.set_product(*i, *j, v.clone());
        }
        assert!(table.is_complete());

        t_ = trace_timer("assemble", t_);
        let _ = t_;
        UniversalAlgebra {
            table,
            provenance: b.provenance,
            a3,
            a4,
            tau0: {
                let cols: Vec<Element> = (0..DIM).map(|i| tau0_apply(&unit(i))).collect();
                Matrix::from_cols(&cols)
            },
            tau1,
            flip_images,
        }
    }
}

impl UniversalAlgebra {
    /// Applies the flip: semilinear over the ring involution
    /// `lm1 <-> lm1f`, `lm2 <-> lm2f`, exchanging the generators.
    pub fn flip_apply(&self, x: &Element) -> Element {
        let mut acc = Element::zero(DIM);
        for i in 0..DIM {
            if x[i].is_zero() {
                continue;
            }
            acc = acc.add_ref(&self.flip_images[i].scale(&x[i].flip()));
        }
        acc
    }

    /// The table with `lm1f = lm1`, `lm2f = lm2` substituted.
    pub fn symmetric_lambda_table(&self) -> AlgebraTable {
        let mut assign = BTreeMap::new();
        assign.insert(Var::Lm1f, Frac::var(Var::Lm1));
        assign.insert(Var::Lm2f, Frac::var(Var::Lm2));
        self.table.specialize(&assign).expect("no poles")
    }

    /// Expansion of `a_3` under the symmetric-lambda substitution.
    pub fn a3_symmetric(&self) -> Element {
        let mut assign = BTreeMap::new();
        assign.insert(Var::Lm1f, Frac::var(Var::Lm1));
        assign.insert(Var::Lm2f, Frac::var(Var::Lm2));
        self.a3.substitute(&assign).expect("no poles")
    }
}

static UNIVERSAL: OnceLock<UniversalAlgebra> = OnceLock::new();

/// The completed universal table (built once, then shared).
pub fn universal() -> &'static UniversalAlgebra {
    UNIVERSAL.get_or_init(Builder::build)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_is_complete_and_idempotents_hold() {
        let u = universal();
        assert!(u.table.is_complete());
        for i in [AM2, AM1, A0, A1, A2] {
            assert_eq!(u.table.product(i, i).unwrap(), &unit(i));
        }
    }

    #[test]
    fn a3_squares_to_itself() {
        let u = universal();
        let sq = u.table.multiply(&u.a3, &u.a3).unwrap();
        assert_eq!(sq, u.a3);
    }

    #[test]
    fn a4_squares_to_itself() {
        let u = universal();
        let sq = u.table.multiply(&u.a4, &u.a4).unwrap();
        assert_eq!(sq, u.a4);
    }

    #[test]
    fn flip_is_an_involution() {
        let u = universal();
        for i in 0..DIM {
            assert_eq!(u.flip_apply(&u.flip_apply(&unit(i))), unit(i), "slot {i}");
        }
    }

    #[test]
    fn tau_maps_are_involutions() {
        let u = universal();
        assert_eq!(u.tau0.mul_mat(&u.tau0), Matrix::identity(DIM));
        assert_eq!(u.tau1.mul_mat(&u.tau1), Matrix::identity(DIM));
    }

    #[test]
    fn s_and_s2_fixed_by_both_involutions() {
        let u = universal();
        assert_eq!(u.tau0.mul_vec(&unit(S)), unit(S));
        assert_eq!(u.tau1.mul_vec(&unit(S)), unit(S));
        assert_eq!(u.tau0.mul_vec(&unit(S2)), unit(S2));
        assert_eq!(u.tau1.mul_vec(&unit(S2)), unit(S2));
    }
}

#[doc(hidden)]
pub fn trace_timer(label: &str, t: std::time::Instant) -> std::time::Instant {
    if std::env::var("AXIAL_TRACE").is_ok() {
        eprintln!("[trace] {label}: {:?}", t.elapsed());
    }
    std::time::Instant::now()
}
