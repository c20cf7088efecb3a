//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are keyed by exponent vectors under the graded-lexicographic order,
//! which fixes a deterministic leading term and printing order.

use super::gcd::poly_gcd;
use super::vars::{Var, ALL_VARS, NVARS};
use super::{ExactError, Frac, Rat};
use num::{BigInt, One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent vector: one nonnegative exponent per variable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mono(pub [u16; NVARS]);

impl Mono {
    pub fn one() -> Mono {
        Mono([0; NVARS])
    }

    pub fn var(v: Var) -> Mono {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Mono(e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Mono(e)
    }

    pub fn divides(&self, other: &Mono) -> bool {
        (0..NVARS).all(|i| self.0[i] <= other.0[i])
    }

    pub fn div(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] - other.0[i];
        }
        Mono(e)
    }

    fn flip(&self) -> Mono {
        let mut e = self.0;
        e.swap(Var::Lm1.index(), Var::Lm1f.index());
        e.swap(Var::Lm2.index(), Var::Lm2f.index());
        Mono(e)
    }
}

/// Graded-lexicographic order: compare total degree first, then exponents
/// variable by variable in canonical order.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => self.0.cmp(&other.0),
            ord => ord,
        }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A sparse multivariate polynomial over the rationals.
///
/// Zero coefficients are never stored; the zero polynomial is the empty map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn int(n: i64) -> Poly {
        Poly::constant(Rat::from(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        Poly::monomial(Mono::var(v), Rat::one())
    }

    pub fn monomial(m: Mono, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(Mono::is_one)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.values().next().cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Rat {
        self.terms.get(m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term under graded-lex.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms
            .keys()
            .map(|m| m.0[v.index()] as u32)
            .max()
            .unwrap_or(0)
    }

    pub fn vars_present(&self) -> Vec<Var> {
        ALL_VARS
            .iter()
            .copied()
            .filter(|v| self.degree_in(*v) > 0)
            .collect()
    }

    fn insert_add(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().clone() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add_ref(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, c.clone());
        }
        out
    }

    pub fn sub_ref(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_add(*m, -c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn mul_ref(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_add(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Positive rational content: gcd of coefficient numerators over lcm of
    /// coefficient denominators. Zero polynomial has content zero.
    pub fn content(&self) -> Rat {
        use num::Integer;
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            Rat::zero()
        } else {
            Rat::new(num_gcd, den_lcm)
        }
    }

    /// Splits off the content: returns `(content-with-sign, primitive part)`
    /// where the primitive part has integer coefficients with gcd 1 and
    /// positive leading coefficient (graded-lex).
    pub fn primitive_part(&self) -> (Rat, Poly) {
        if self.is_zero() {
            return (Rat::zero(), Poly::zero());
        }
        let mut c = self.content();
        if self.leading().unwrap().1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    /// Exact division; `None` when `other` does not divide `self`.
    pub fn div_exact(&self, other: &Poly) -> Option<Poly> {
        if other.is_zero() {
            return None;
        }
        let (lm, lc) = {
            let (m, c) = other.leading().unwrap();
            (*m, c.clone())
        };
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (m, c) = {
                let (m, c) = rem.leading().unwrap();
                (*m, c.clone())
            };
            if !lm.divides(&m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c / lc.clone();
            let t = Poly::monomial(qm, qc);
            rem = rem.sub_ref(&t.mul_ref(other));
            quot = quot.add_ref(&t);
        }
        Some(quot)
    }

    /// View as a univariate polynomial in `v`: coefficient polynomials
    /// indexed by the exponent of `v`.
    pub fn univariate_in(&self, v: Var) -> Vec<Poly> {
        let d = self.degree_in(v) as usize;
        let mut out = vec![Poly::zero(); d + 1];
        for (m, c) in &self.terms {
            let e = m.0[v.index()] as usize;
            let mut rest = *m;
            rest.0[v.index()] = 0;
            out[e].insert_add(rest, c.clone());
        }
        out
    }

    pub fn from_univariate(v: Var, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero();
        for (e, p) in coeffs.iter().enumerate() {
            let shift = {
                let mut m = [0u16; NVARS];
                m[v.index()] = e as u16;
                Mono(m)
            };
            for (m, c) in &p.terms {
                out.insert_add(m.mul(&shift), c.clone());
            }
        }
        out
    }

    /// Substitute values for a subset of the variables. Unassigned variables
    /// remain symbolic.
    pub fn substitute(&self, assign: &BTreeMap<Var, Frac>) -> Frac {
        let mut acc = Frac::zero();
        for (m, c) in &self.terms {
            let mut residual = [0u16; NVARS];
            let mut factor = Frac::from_rat(c.clone());
            for v in ALL_VARS {
                let e = m.0[v.index()];
                if e == 0 {
                    continue;
                }
                match assign.get(&v) {
                    Some(val) => factor = factor.mul(&val.pow_u32(e as u32)),
                    None => residual[v.index()] = e,
                }
            }
            let term = factor.mul(&Frac::from_poly(Poly::monomial(Mono(residual), Rat::one())));
            acc = acc.add(&term);
        }
        acc
    }

    /// Evaluates at a full rational point.
    pub fn eval_at(&self, point: &[Rat; NVARS]) -> Rat {
        use num::Zero;
        // power tables per variable
        let mut pows: Vec<Vec<Rat>> = Vec::with_capacity(NVARS);
        for (v, p) in point.iter().enumerate() {
            let d = self.degree_in(Var::from_index(v)) as usize;
            let mut table = Vec::with_capacity(d + 1);
            table.push(Rat::one());
            for k in 1..=d {
                let prev: &Rat = &table[k - 1];
                table.push(prev * p);
            }
            pows.push(table);
        }
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for v in 0..NVARS {
                let e = m.0[v] as usize;
                if e > 0 {
                    t *= &pows[v][e];
                }
            }
            acc += t;
        }
        acc
    }

    /// The flip involution on the ring: `lm1 <-> lm1f`, `lm2 <-> lm2f`.
    pub fn flip(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.flip(), c.clone())).collect(),
        }
    }

    pub fn gcd(&self, other: &Poly) -> Result<Poly, ExactError> {
        poly_gcd(self, other)
    }
}

fn fmt_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    /// Deterministic canonical form: terms in descending graded-lex order,
    /// explicit `*` and `^`, no spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
                first = false;
            } else if neg {
                f.write_str("-")?;
            } else {
                f.write_str("+")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                parts.push(fmt_rat(&abs));
            }
            for v in ALL_VARS {
                let e = m.0[v.index()];
                match e {
                    0 => {}
                    1 => parts.push(v.name().to_string()),
                    _ => parts.push(format!("{}^{}", v.name(), e)),
                }
            }
            f.write_str(&parts.join("*"))?;
        }
        Ok(())
    }
}

/// Sylvester-determinant resultant of `a` and `b` with respect to `var`.
pub fn resultant_in(var: Var, a: &Poly, b: &Poly) -> Result<Poly, ExactError> {
    let da = a.degree_in(var) as usize;
    let db = b.degree_in(var) as usize;
    if da == 0 {
        return Err(ExactError::ResultantConstant(a.to_string()));
    }
    if db == 0 {
        return Err(ExactError::ResultantConstant(b.to_string()));
    }
    let ca = a.univariate_in(var);
    let cb = b.univariate_in(var);
    let n = da + db;
    // Sylvester matrix rows: db shifted copies of a's coefficients, then da of b's.
    let mut rows: Vec<Vec<Frac>> = Vec::with_capacity(n);
    for shift in 0..db {
        let mut row = vec![Frac::zero(); n];
        for (i, c) in ca.iter().enumerate() {
            row[shift + (da - i)] = Frac::from_poly(c.clone());
        }
        rows.push(row);
    }
    for shift in 0..da {
        let mut row = vec![Frac::zero(); n];
        for (i, c) in cb.iter().enumerate() {
            row[shift + (db - i)] = Frac::from_poly(c.clone());
        }
        rows.push(row);
    }
    let det = crate::algebra::Matrix::from_rows(rows).det();
    debug_assert!(det.den().is_constant());
    Ok(det.num().scale(&det.den().as_constant().unwrap().recip()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, parse_poly, rat};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn grlex_order() {
        let a2 = Mono::var(Var::Al).mul(&Mono::var(Var::Al));
        let ab = Mono::var(Var::Al).mul(&Mono::var(Var::Bt));
        let b = Mono::var(Var::Bt);
        assert!(a2 > ab);
        assert!(ab > b);
        assert!(a2 > b);
    }

    #[test]
    fn difference_of_squares() {
        let lhs = p("al-bt").mul_ref(&p("al+bt"));
        assert_eq!(lhs, p("al^2-bt^2"));
    }

    #[test]
    fn zeroth_power_is_one() {
        assert_eq!(p("2*al-1").pow(0), Poly::one());
    }

    #[test]
    fn expand_and_recollect_mother_factor() {
        // Third factor of the mother relation, expanded two ways.
        let f = p("4*(2*al-1)*lm1^2-2*(al^2+6*bt*al-4*bt)*lm1-al*bt*lm2+2*al^2*bt+4*(al-1)*bt^2");
        let g = p("8*al*lm1^2-4*lm1^2-2*al^2*lm1-12*al*bt*lm1+8*bt*lm1-al*bt*lm2+2*al^2*bt+4*al*bt^2-4*bt^2");
        assert_eq!(f, g);
    }

    #[test]
    fn primitive_part_normalizes_sign() {
        let q = p("2*al-4*bt").scale(&rat(-3, 2));
        let (c, prim) = q.primitive_part();
        assert_eq!(prim, p("al-2*bt"));
        assert_eq!(c, rat(-3, 1));
        assert_eq!(prim.scale(&c), q);
    }

    #[test]
    fn exact_division() {
        let prod = p("al-bt").mul_ref(&p("al+bt"));
        assert_eq!(prod.div_exact(&p("al-bt")), Some(p("al+bt")));
        assert_eq!(p("al-2*lm1").div_exact(&p("2*al-1")), None);
    }

    #[test]
    fn display_round_trip() {
        let q = p("3*al^2*bt-lm1+1/2");
        assert_eq!(p(&q.to_string()), q);
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(p("al^2").scale(&rat(1, 2)).to_string(), "1/2*al^2");
    }

    #[test]
    fn resultant_linear_case() {
        // Res_lm1(lm1 - al, lm1 - bt) = +/- (al - bt).
        let r = resultant_in(Var::Lm1, &p("lm1-al"), &p("lm1-bt")).unwrap();
        assert!(r == p("al-bt") || r == p("bt-al"));
    }

    #[test]
    fn resultant_common_root_vanishes() {
        let r = resultant_in(Var::Al, &p("al^2-1"), &p("al-1")).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn resultant_rejects_constants() {
        assert!(resultant_in(Var::Al, &p("bt"), &p("al-1")).is_err());
    }

    #[test]
    fn substitute_partial() {
        let mut assign = BTreeMap::new();
        assign.insert(Var::Al, Frac::from_rat(rat(1, 4)));
        let f = p("al*bt+al^2").substitute(&assign);
        let expect = Frac::from_poly(p("bt").scale(&rat(1, 4)).add_ref(&Poly::constant(rat(1, 16))));
        assert_eq!(f, expect);
        let _ = int(0);
    }
}
