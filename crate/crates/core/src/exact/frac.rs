//! The fraction field of the six-variable polynomial ring, with canonical
//! normalization: numerator and denominator are coprime integer polynomials
//! with coprime contents, and the denominator has positive leading
//! coefficient under graded-lex. Equality is structural.

use super::gcd::{integerize_pair, poly_gcd};
use super::poly::Poly;
use super::vars::Var;
use super::{ExactError, Rat};
use num::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frac {
    num: Poly,
    den: Poly,
}

/// Denominators in this library are overwhelmingly products of the ring's
/// inverted linear forms; cancelling those by trial division avoids the
/// full multivariate gcd in the hot path. Each catalog entry carries an
/// evaluation point on its zero locus (generic for the other factors), so
/// non-divisibility of a large numerator is detected by one evaluation.
fn small_factor_catalog() -> &'static [(Poly, [Rat; 6])] {
    use std::sync::OnceLock;
    static CATALOG: OnceLock<Vec<(Poly, [Rat; 6])>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let pt = |a: (i64, i64), b: (i64, i64)| {
            [
                super::rat(a.0, a.1),
                super::rat(b.0, b.1),
                super::rat(23, 7),
                super::rat(29, 7),
                super::rat(31, 7),
                super::rat(37, 7),
            ]
        };
        [
            ("al", pt((0, 1), (3, 1))),
            ("bt", pt((3, 1), (0, 1))),
            ("al-bt", pt((3, 1), (3, 1))),
            ("al-2*bt", pt((6, 1), (3, 1))),
            ("al-4*bt", pt((12, 1), (3, 1))),
            ("al-1", pt((1, 1), (3, 1))),
            ("bt-1", pt((3, 1), (1, 1))),
            ("2*al-1", pt((1, 2), (3, 1))),
        ]
        .into_iter()
        .map(|(s, p)| (super::parse::parse_poly(s).expect("catalog"), p))
        .collect()
    })
}

/// Cancels common factors of `num`/`den`: catalog trial division first,
/// then a full gcd on whatever part of the denominator remains.
fn cancel_common(mut num: Poly, mut den: Poly) -> (Poly, Poly) {
    if den.is_constant() || num.is_constant() {
        return (num, den);
    }
    let mut den_rest = den.clone();
    for (f, point) in small_factor_catalog() {
        let mut mult = 0usize;
        while let Some(d2) = den_rest.div_exact(f) {
            den_rest = d2;
            mult += 1;
        }
        if mult == 0 {
            continue;
        }
        if !num.eval_at(point).is_zero() {
            continue;
        }
        for _ in 0..mult {
            match (num.div_exact(f), den.div_exact(f)) {
                (Some(n2), Some(d2)) => {
                    num = n2;
                    den = d2;
                }
                _ => break,
            }
            if num.is_constant() {
                break;
            }
        }
        if den_rest.is_constant() || num.is_constant() {
            break;
        }
    }
    let (_, den_rest) = den_rest.primitive_part();
    if den_rest.is_constant() || num.is_constant() {
        return (num, den);
    }
    let g = poly_gcd(&num, &den_rest).expect("nonzero inputs");
    if !g.is_constant() {
        num = num.div_exact(&g).expect("gcd divides");
        den = den.div_exact(&g).expect("gcd divides");
    }
    (num, den)
}

impl Frac {
    /// Builds `num/den` in canonical form. Errors when `den = 0`.
    pub fn new(num: Poly, den: Poly) -> Result<Frac, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Frac {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let (mut n, mut d) = cancel_common(num, den);
        let (n2, d2) = integerize_pair(&n, &d);
        n = n2;
        d = d2;
        if d.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            n = n.neg_ref();
            d = d.neg_ref();
        }
        Ok(Frac { num: n, den: d })
    }

    pub fn from_poly(p: Poly) -> Frac {
        Frac::new(p, Poly::one()).expect("unit denominator")
    }

    pub fn from_rat(r: Rat) -> Frac {
        Frac::from_poly(Poly::constant(r))
    }

    pub fn from_int(n: i64) -> Frac {
        Frac::from_poly(Poly::int(n))
    }

    pub fn rat(n: i64, d: i64) -> Frac {
        Frac::from_rat(super::rat(n, d))
    }

    pub fn var(v: Var) -> Frac {
        Frac::from_poly(Poly::var(v))
    }

    pub fn zero() -> Frac {
        Frac {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Frac {
        Frac::from_poly(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Constant value when the fraction is free of variables.
    pub fn as_rat(&self) -> Option<Rat> {
        match (self.num.as_constant(), self.den.as_constant()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, other: &Frac) -> Frac {
        let num = self
            .num
            .mul_ref(&other.den)
            .add_ref(&other.num.mul_ref(&self.den));
        let den = self.den.mul_ref(&other.den);
        Frac::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Frac) -> Frac {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Frac {
        Frac {
            num: self.num.neg_ref(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Frac) -> Frac {
        Frac::new(
            self.num.mul_ref(&other.num),
            self.den.mul_ref(&other.den),
        )
        .expect("nonzero denominators")
    }

    pub fn scale_rat(&self, r: &Rat) -> Frac {
        Frac::new(self.num.scale(r), self.den.clone()).expect("nonzero denominator")
    }

    pub fn div(&self, other: &Frac) -> Result<Frac, ExactError> {
        if other.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Frac::new(
            self.num.mul_ref(&other.den),
            self.den.mul_ref(&other.num),
        )
    }

    pub fn inv(&self) -> Result<Frac, ExactError> {
        Frac::one().div(self)
    }

    pub fn pow_u32(&self, e: u32) -> Frac {
        let mut out = Frac::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn pow_i64(&self, e: i64) -> Result<Frac, ExactError> {
        if e >= 0 {
            Ok(self.pow_u32(e as u32))
        } else {
            self.pow_u32((-e) as u32).inv()
        }
    }

    /// Substitutes values for a subset of the variables. Fails with a pole
    /// error naming the offending denominator when it vanishes.
    pub fn substitute(&self, assign: &BTreeMap<Var, Frac>) -> Result<Frac, ExactError> {
        let n = self.num.substitute(assign);
        let d = self.den.substitute(assign);
        if d.is_zero() {
            return Err(ExactError::Pole(self.den.to_string()));
        }
        n.div(&d)
    }

    /// The flip involution on the ring.
    pub fn flip(&self) -> Frac {
        Frac::new(self.num.flip(), self.den.flip()).expect("flip preserves nonzero")
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.as_constant().map(|c| c.is_one()).unwrap_or(false) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_frac, parse_poly, rat};

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    fn f(s: &str) -> Frac {
        parse_frac(s).unwrap()
    }

    #[test]
    fn cancel_common_factor() {
        let q = Frac::new(p("al^2-al*bt"), p("al")).unwrap();
        assert_eq!(q, Frac::from_poly(p("al-bt")));
    }

    #[test]
    fn sign_normalization() {
        let q = Frac::new(p("al-bt").neg_ref(), Poly::int(-1)).unwrap();
        assert_eq!(q, Frac::from_poly(p("al-bt")));
        assert_eq!(q.den(), &Poly::one());
    }

    #[test]
    fn five_a_lambda_stays_irreducible() {
        let q = f("(3*(5*al-1))/32");
        assert_eq!(q.num(), &p("15*al-3"));
        assert_eq!(q.den(), &Poly::int(32));
        assert_eq!(q.to_string(), "(15*al-3)/(32)");
    }

    #[test]
    fn den_zero_is_error() {
        assert!(Frac::new(Poly::one(), Poly::zero()).is_err());
    }

    #[test]
    fn substitution_specializes_6a_form_value() {
        // (1/16) al^2 (2-3al) / (2al-1)^2 at al = 1/4 equals 5/256.
        let q = f("(al^2*(2-3*al))/(16*(2*al-1)^2)");
        let mut assign = BTreeMap::new();
        assign.insert(Var::Al, Frac::rat(1, 4));
        assert_eq!(q.substitute(&assign).unwrap(), Frac::rat(5, 256));
    }

    #[test]
    fn substitution_specializes_5a_form_value() {
        let q = f("(3*(5*al-1))/32");
        let mut assign = BTreeMap::new();
        assign.insert(Var::Al, Frac::rat(1, 4));
        assert_eq!(q.substitute(&assign).unwrap(), Frac::rat(3, 128));
    }

    #[test]
    fn substitution_pole_names_polynomial() {
        let q = f("bt/(al-2*bt)");
        let mut assign = BTreeMap::new();
        assign.insert(Var::Al, Frac::rat(1, 4));
        assign.insert(Var::Bt, Frac::rat(1, 8));
        match q.substitute(&assign) {
            Err(ExactError::Pole(s)) => assert_eq!(s, "al-2*bt"),
            other => panic!("expected pole error, got {other:?}"),
        }
    }

    #[test]
    fn rational_constants_reduce() {
        let q = Frac::new(Poly::constant(rat(6, 1)), Poly::int(4)).unwrap();
        assert_eq!(q, Frac::rat(3, 2));
        assert_eq!(q.to_string(), "(3)/(2)");
    }
}
