//! Multivariate polynomial gcd.
//!
//! Content/primitive-part recursion on the variable of highest degree, with
//! a subresultant pseudo-remainder sequence for the univariate steps. Exact
//! throughout; the result is primitive with positive leading coefficient
//! under graded-lex, scaled by the gcd of the rational contents.

use super::poly::Poly;
use super::vars::Var;
use super::{ExactError, Rat};
use num::{BigInt, Integer, Signed, Zero};

/// gcd of two positive rationals: gcd of numerators over lcm of denominators.
fn rat_gcd(a: &Rat, b: &Rat) -> Rat {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    Rat::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom())).abs()
}

/// Greatest common divisor with deterministic normalization: the primitive
/// part is an integer polynomial with content 1 and positive graded-lex
/// leading coefficient, scaled by the gcd of the inputs' rational contents.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly, ExactError> {
    if a.is_zero() && b.is_zero() {
        return Err(ExactError::GcdBothZero);
    }
    let (ca, pa) = a.primitive_part();
    let (cb, pb) = b.primitive_part();
    let c = rat_gcd(&ca, &cb);
    if a.is_zero() {
        return Ok(pb.scale(&c));
    }
    if b.is_zero() {
        return Ok(pa.scale(&c));
    }
    let g = primitive_gcd(&pa, &pb);
    Ok(g.scale(&c))
}

/// gcd of two nonzero primitive polynomials; result primitive, positive
/// leading coefficient.
fn primitive_gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    // Recurse on the variable of highest degree in either input.
    let var = pick_main_var(a, b);
    let (conta, ppa) = content_in(a, var);
    let (contb, ppb) = content_in(b, var);
    let gcont = primitive_gcd(&conta, &contb);
    let gpp = subresultant_prs_gcd(&ppa, &ppb, var);
    let (_, out) = gcont.mul_ref(&gpp).primitive_part();
    out
}

fn pick_main_var(a: &Poly, b: &Poly) -> Var {
    let mut best = None;
    let mut best_deg = 0;
    for v in super::vars::ALL_VARS {
        let d = a.degree_in(v).max(b.degree_in(v));
        if d > best_deg {
            best_deg = d;
            best = Some(v);
        }
    }
    best.expect("nonconstant inputs have a variable")
}

/// Content of `p` with respect to `var`: the (recursive) gcd of its
/// coefficient polynomials. Returns `(content, primitive part)`.
fn content_in(p: &Poly, var: Var) -> (Poly, Poly) {
    let coeffs = p.univariate_in(var);
    let mut cont: Option<Poly> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let (_, cp) = c.primitive_part();
        cont = Some(match cont {
            None => cp,
            Some(g) => primitive_gcd(&g, &cp),
        });
        if cont.as_ref().unwrap().is_constant() {
            cont = Some(Poly::one());
            break;
        }
    }
    let cont = cont.unwrap_or_else(Poly::one);
    let pp = p.div_exact(&cont).expect("content divides");
    (cont, pp)
}

/// Pseudo-remainder of `a` by `b` in `var`: `lc(b)^(da-db+1) * a mod b`.
fn pseudo_rem(a: &Poly, b: &Poly, var: Var) -> Poly {
    let db = b.degree_in(var);
    let cb = b.univariate_in(var);
    let lcb = cb.last().unwrap().clone();
    let mut r = a.clone();
    let mut dr = r.degree_in(var);
    while !r.is_zero() && dr >= db {
        let cr = r.univariate_in(var);
        let lcr = cr.last().unwrap().clone();
        // r <- lcb * r - lcr * x^(dr-db) * b
        let shift = Poly::from_univariate(var, &{
            let mut v = vec![Poly::zero(); (dr - db) as usize];
            v.push(lcr);
            v
        });
        r = r.mul_ref(&lcb).sub_ref(&shift.mul_ref(b));
        let ndr = r.degree_in(var);
        if r.is_zero() {
            break;
        }
        debug_assert!(ndr < dr || dr == 0);
        dr = ndr;
        if dr < db {
            break;
        }
    }
    r
}

/// Subresultant PRS gcd of polynomials primitive in `var`.
fn subresultant_prs_gcd(a: &Poly, b: &Poly, var: Var) -> Poly {
    let (mut f, mut g) = if a.degree_in(var) >= b.degree_in(var) {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    let mut h = Poly::one();
    let mut s = Poly::one();
    loop {
        let delta = f.degree_in(var) - g.degree_in(var);
        let r = pseudo_rem(&f, &g, var);
        if r.is_zero() {
            let (_, pp) = content_in(&g, var);
            let (_, out) = pp.primitive_part();
            return out;
        }
        if r.degree_in(var) == 0 {
            return Poly::one();
        }
        // divisor s * h^delta per the subresultant rules
        let mut divisor = s.clone();
        for _ in 0..delta {
            divisor = divisor.mul_ref(&h);
        }
        f = g;
        g = r.div_exact(&divisor).unwrap_or(r);
        let lcf = f.univariate_in(var).last().unwrap().clone();
        s = lcf.clone();
        // h <- lcf^delta / h^(delta-1)
        let mut num = Poly::one();
        for _ in 0..delta {
            num = num.mul_ref(&lcf);
        }
        let mut den = Poly::one();
        for _ in 1..delta.max(1) {
            den = den.mul_ref(&h);
        }
        h = num.div_exact(&den).unwrap_or(num);
    }
}

/// Exact divisibility test with quotient: `Some(q)` iff `b = a * q`.
pub fn poly_divides(a: &Poly, b: &Poly) -> Option<Poly> {
    if a.is_zero() {
        return None;
    }
    b.div_exact(a)
}

/// Integer-coefficient lcm consistency helper used by fraction
/// normalization: scales a rational-coefficient pair to coprime integer
/// polynomials.
pub(super) fn integerize_pair(num: &Poly, den: &Poly) -> (Poly, Poly) {
    let cn = num.content();
    let cd = den.content();
    if cd.is_zero() {
        return (num.clone(), den.clone());
    }
    // Scale so both have integer coefficients with coprime contents.
    let denom_lcm: BigInt = cn.denom().lcm(cd.denom());
    let num_gcd: BigInt = if cn.is_zero() {
        cd.numer().clone()
    } else {
        cn.numer().gcd(cd.numer())
    };
    let scale = Rat::new(denom_lcm, num_gcd);
    (num.scale(&scale), den.scale(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn shared_linear_factor() {
        let g = poly_gcd(&p("al^2-bt^2"), &p("al-bt")).unwrap();
        assert_eq!(g, p("al-bt"));
    }

    #[test]
    fn coprime_linear_forms() {
        let g = poly_gcd(&p("2*al-1"), &p("al-2*lm1")).unwrap();
        assert_eq!(g, Poly::one());
    }

    #[test]
    fn monomial_times_factor() {
        let a = p("al").mul_ref(&p("al-4*bt").pow(2));
        let b = p("al^2").mul_ref(&p("al-4*bt"));
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, p("al").mul_ref(&p("al-4*bt")));
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn both_zero_is_error() {
        assert!(poly_gcd(&Poly::zero(), &Poly::zero()).is_err());
    }

    #[test]
    fn divides_with_quotient() {
        assert_eq!(poly_divides(&p("al-bt"), &p("al^2-bt^2")), Some(p("al+bt")));
        assert_eq!(poly_divides(&p("2*al-1"), &p("al-2*lm1")), None);
    }

    #[test]
    fn gcd_with_rational_contents() {
        let a = p("al^2-bt^2").scale(&crate::exact::rat(3, 2));
        let b = p("al-bt").scale(&crate::exact::rat(9, 4));
        let g = poly_gcd(&a, &b).unwrap();
        // contents 3/2 and 9/4 have gcd 3/4
        assert_eq!(g, p("al-bt").scale(&crate::exact::rat(3, 4)));
    }
}
