//! Reference closed forms for the spanning-set computation, transcribed
//! from the classical displays. The derivation engine never consumes
//! these; tests compare derived values against them, so a transcription
//! garble shows up as a named mismatch rather than a wrong table.

use super::span::*;
use crate::algebra::Element;
use crate::exact::{parse_frac, Frac};

pub fn fr(s: &str) -> Frac {
    parse_frac(s).unwrap_or_else(|e| panic!("bad closed form `{s}`: {e}"))
}

fn elem(parts: &[(&str, usize)]) -> Element {
    let mut e = Element::zero(DIM);
    for (c, i) in parts {
        e[*i] = e[*i].add(&fr(c));
    }
    e
}

/// `a_0 s = (al-bt)s + (lm1(1-al)+bt(al-bt-1))a_0 + 1/2(al-bt)bt(a_1 + a_-1)`.
pub fn a0_s() -> Element {
    elem(&[
        ("al-bt", S),
        ("lm1*(1-al)+bt*(al-bt-1)", A0),
        ("(al-bt)*bt/2", A1),
        ("(al-bt)*bt/2", AM1),
    ])
}

/// `a_1 s`, the generator-swapped companion of `a_0 s`.
pub fn a1_s() -> Element {
    elem(&[
        ("al-bt", S),
        ("lm1f*(1-al)+bt*(al-bt-1)", A1),
        ("(al-bt)*bt/2", A0),
        ("(al-bt)*bt/2", A2),
    ])
}

/// `a_0 s_2 = (al-bt)s_2 + (lm2(1-al)+bt(al-bt-1))a_0 + 1/2(al-bt)bt(a_2 + a_-2)`.
pub fn a0_s2() -> Element {
    elem(&[
        ("al-bt", S2),
        ("lm2*(1-al)+bt*(al-bt-1)", A0),
        ("(al-bt)*bt/2", A2),
        ("(al-bt)*bt/2", AM2),
    ])
}

/// The `ss` display exactly as printed: every coefficient carries the
/// common prefactor `1/2 (al-bt)/(al-2bt)`; the `(a_1)_+`, `(a_2)_+` terms
/// split evenly over the two mirror-image axes.
pub fn ss_printed() -> Element {
    let pre = fr("((al-bt)/(al-2*bt))/2");
    let c_a0 = fr("4*(1-2*al)*lm1^2+2*(al^2+al*bt-4*bt)*lm1+al*bt*lm2-bt*(al^2+9*al*bt-4*bt^2-4*bt)");
    let c_a1 = fr("2*(-al^2+6*al*bt+al-4*bt)*lm1-bt*(10*al*bt-4*bt^2+al-6*bt)");
    let c_a2 = fr("bt*(al-4*bt)*(al-bt)");
    let c_s = fr("(2/(al-bt))*(al*(3*al-2*bt-1)*lm1-bt*(6*al^2-10*al*bt+4*bt^2-al))");
    let half = Frac::rat(1, 2);
    let mut e = Element::zero(DIM);
    e[A0] = c_a0;
    e[A1] = c_a1.mul(&half);
    e[AM1] = c_a1.mul(&half);
    e[A2] = c_a2.mul(&half);
    e[AM2] = c_a2.mul(&half);
    e[S] = c_s;
    e[S2] = fr("-al*bt");
    e[S2F] = fr("bt*(al-2*bt)");
    e.scale(&pre)
}

/// The `ss` display with the source's two print defects undone: the
/// display was set with `lm1f` collapsed to `lm1` and with the `a_0`
/// coefficient's `2(al^2+6*al*bt-4bt)lm1` missing its `6`. The flipped
/// companion display retains `lm1f` and fixes the asymmetric slots.
pub fn ss() -> Element {
    let pre = fr("((al-bt)/(al-2*bt))/2");
    let c_a0 = fr("4*(1-2*al)*lm1^2+2*(al^2+6*al*bt-4*bt)*lm1+al*bt*lm2-bt*(al^2+9*al*bt-4*bt^2-4*bt)");
    let c_a1 = fr("2*(-al^2+6*al*bt+al-4*bt)*lm1f-bt*(10*al*bt-4*bt^2+al-6*bt)");
    let c_a2 = fr("bt*(al-4*bt)*(al-bt)");
    let c_s = fr("(2/(al-bt))*(2*al*(al-bt)*lm1+al*(al-1)*lm1f-bt*(6*al^2-10*al*bt+4*bt^2-al))");
    let half = Frac::rat(1, 2);
    let mut e = Element::zero(DIM);
    e[A0] = c_a0;
    e[A1] = c_a1.mul(&half);
    e[AM1] = c_a1.mul(&half);
    e[A2] = c_a2.mul(&half);
    e[AM2] = c_a2.mul(&half);
    e[S] = c_s;
    e[S2] = fr("-al*bt");
    e[S2F] = fr("bt*(al-2*bt)");
    e.scale(&pre)
}

/// The displayed expansion of `a_3`, transcribed verbatim. Some of its
/// coefficients are garbled in the source display; `a3()` carries the
/// corrections, each forced by the flip symmetry and confirmed by the
/// derivation.
pub fn a3_printed() -> Element {
    let d = fr("1/(bt*(al-bt)*(al-4*bt))");
    let dd = fr("1/((bt*(al-bt)*(al-4*bt))*(al-bt))");
    let mut e = Element::zero(DIM);
    e[AM2] = Frac::one();
    e[AM1] = fr("4*al*bt*lm1-2*(al^2-(4*bt+1)*al+4*bt)*lm1f-al^2*bt-al*bt*(5*bt-1)+6*bt^2").mul(&d);
    e[A0] = fr(
        "4*(3*al^2-(4*bt-1)*al+2*bt)*lm1^2+(4*al*(al-1)*lm1f-6*al^3-2*(3*bt-1)*al^2+2*al*bt*(8*bt+1)-8*bt^2)*lm1\
         -4*al*bt*(bt-1)*lm1f-2*al*bt*(al-bt)*lm2+2*bt*al^3+bt*(6*bt-1)*al^2-al*bt^2*(12*bt-1)+2*bt^3*(2*bt-1)",
    )
    .mul(&dd);
    e[A1] = fr(
        "4*al*(al-1)*lm1*lm1f-4*al*bt*(bt-1)*lm1+4*(3*al^2-4*al*(4*bt-1)+2*bt)*lm1f^2\
         -2*(3*al^3+al^2*(3*bt-1)-al*bt*(8*bt+1)+4*bt^2)*lm1f+2*al*bt*(al-bt)*lm2+2*al^3*bt+al^2*bt*(6*bt-1)\
         -al*bt^2*(12*bt+1)+2*bt^3*(2*bt+1)",
    )
    .mul(&dd);
    e[A2] = fr("2*(al^2-al*(4*bt+1)+4*bt)*lm1-4*al*bt*lm1f+al^2*bt+al*bt*(5*bt+1)-6*bt^2").mul(&d);
    e[S] = fr("4*al*(al-2*bt+1)*lm1+4*al*(-al+2*bt-1)*lm1f").mul(&dd);
    e[S2F] = fr("4/(al-4*bt)");
    e[S2] = fr("-4/(al-4*bt)");
    e
}

/// The expansion of `a_3` with the display's extraction defects undone.
/// The `a_2` and `s` coefficients and the overall shape are as printed;
/// the repairs, each forced by the flip symmetry `a_3 = f(a_-2)` and
/// confirmed by the derivation, are:
///   - `a_-1` coefficient: `al*bt*(5bt-1)` was `al*bt*(5bt+1)`,
///   - `a_1` coefficient: `4al(4bt-1)` reads `(4bt+1)al`, and its
///     `2 al bt (al-bt) lm2` term is `-2 al bt (al-bt) lm2f`,
///   - `a_0` coefficient: equals minus the flip of the `a_1` coefficient.
pub fn a3() -> Element {
    let d = fr("1/(bt*(al-bt)*(al-4*bt))");
    let dd = fr("1/((bt*(al-bt)*(al-4*bt))*(al-bt))");
    let c1 = fr(
        "4*al*(al-1)*lm1*lm1f-4*al*bt*(bt-1)*lm1+4*(3*al^2-(4*bt+1)*al+2*bt)*lm1f^2\
         -2*(3*al^3+al^2*(3*bt-1)-al*bt*(8*bt+1)+4*bt^2)*lm1f-2*al*bt*(al-bt)*lm2f+2*al^3*bt+al^2*bt*(6*bt-1)\
         -al*bt^2*(12*bt+1)+2*bt^3*(2*bt+1)",
    );
    let mut e = Element::zero(DIM);
    e[AM2] = Frac::one();
    e[AM1] = fr("4*al*bt*lm1-2*(al^2-(4*bt+1)*al+4*bt)*lm1f-al^2*bt-al*bt*(5*bt+1)+6*bt^2").mul(&d);
    e[A0] = c1.flip().neg().mul(&dd);
    e[A1] = c1.mul(&dd);
    e[A2] = fr("2*(al^2-al*(4*bt+1)+4*bt)*lm1-4*al*bt*lm1f+al^2*bt+al*bt*(5*bt+1)-6*bt^2").mul(&d);
    e[S] = fr("4*al*(al-2*bt+1)*lm1+4*al*(-al+2*bt-1)*lm1f").mul(&dd);
    e[S2F] = fr("4/(al-4*bt)");
    e[S2] = fr("-4/(al-4*bt)");
    e
}

/// The display of `a_0 s_2^f` as printed (one coefficient garble; see
/// `a0_s2f_repairs`).
pub fn a0_s2f_printed() -> Element {
    let pre = fr("1/(al-2*bt)");
    let c_a0 = fr(
        "(2*(3*al-(4*bt-1)*al+2*bt)*lm1^2+2*al*(al-1)*lm1*lm1f+2*(-2*al^3+al^2+al*bt*(2*bt-1))*lm1\
         +4*bt*(-al^2+al*(bt+1)-bt)*lm1f-al*bt*(al-bt)*lm2+4*al^3*bt-2*bt*(2*bt+1)*al^2+2*al*bt^2*(bt+1)-2*bt^4)/(al-bt)",
    );
    let mix = fr("-(2*al*lm1+2*(al-1)*lm1f-2*al^2+(bt+1/2)*al-2*bt^2+bt)");
    let mut e = Element::zero(DIM);
    e[A0] = c_a0;
    e[A1] = mix.mul(&fr("bt"));
    e[AM1] = mix.mul(&fr("bt"));
    e[S] = mix;
    e[A2] = fr("(al-bt)*bt^2");
    e[AM2] = fr("(al-bt)*bt^2");
    e[S2] = fr("2*bt*(al-bt)");
    e.scale(&pre)
}

/// `a_0 s_2^f` with the display defects undone: the `a_0` coefficient's
/// leading `2(3al - (4bt-1)al + 2bt) lm1^2` reads
/// `2(3al^2 - (4bt+1)al + 2bt) lm1^2`, and the grouped term is
/// `(...)(bt(a_1 + a_-1) + 2s)`, not `(...)(bt(a_1 + a_-1) + s)`.
pub fn a0_s2f() -> Element {
    let pre = fr("1/(al-2*bt)");
    let c_a0 = fr(
        "(2*(3*al^2-(4*bt+1)*al+2*bt)*lm1^2+2*al*(al-1)*lm1*lm1f+2*(-2*al^3+al^2+al*bt*(2*bt-1))*lm1\
         +4*bt*(-al^2+al*(bt+1)-bt)*lm1f-al*bt*(al-bt)*lm2+4*al^3*bt-2*bt*(2*bt+1)*al^2+2*al*bt^2*(bt+1)-2*bt^4)/(al-bt)",
    );
    let mix = fr("-(2*al*lm1+2*(al-1)*lm1f-2*al^2+(bt+1/2)*al-2*bt^2+bt)");
    let mut e = Element::zero(DIM);
    e[A0] = c_a0;
    e[A1] = mix.mul(&fr("bt"));
    e[AM1] = mix.mul(&fr("bt"));
    e[S] = mix.mul(&Frac::from_int(2));
    e[A2] = fr("(al-bt)*bt^2");
    e[AM2] = fr("(al-bt)*bt^2");
    e[S2] = fr("2*bt*(al-bt)");
    e.scale(&pre)
}

/// The displayed `zz` expansion.
pub fn zz_printed() -> Element {
    let pre = fr("-1/(4*(al-2*bt))");
    let mut e = Element::zero(DIM);
    e[AM2] = fr("bt*al*(al-bt)^2");
    e[A2] = fr("bt*al*(al-bt)^2");
    let c1 = fr("al*(al-bt)*(2*lm1f-al-4*bt*lm1+4*bt^2-2*al*lm1f+2*al*bt)");
    e[AM1] = c1.clone();
    e[A1] = c1;
    e[A0] = fr(
        "2*al*(-2*lm1*lm1f+2*bt*lm1f+2*bt*lm1-2*bt^2+bt^2*lm2+4*bt^2*lm1-3*bt^3+2*al*lm1*lm1f\
         +2*al*lm1^2-al*bt*lm2-2*al*bt*lm1f-4*al*bt*lm1-2*al^2*lm1+3*al^2*bt-4*al*bt*lm1^2+2*al^2*lm1^2)",
    );
    e[S] = fr("4*al*(lm1f-bt+2*bt*lm1-al*lm1f-2*al*lm1-2*al*bt+2*al^2)");
    e[S2] = fr("2*bt*al*(al-bt)");
    e[S2F] = fr("-2*al*(al-bt)*(al-2*bt)");
    e.scale(&pre)
}

/// The three factors of the mother relation (in the symmetric-lambda
/// ring) and the prefactor, exactly as printed. The printed second factor
/// ends in `2 bt^2 (2 + 3bt)` and the prefactor in `-2`; see
/// `mother_factors` for the corrected values.
pub fn mother_factors_printed() -> (Frac, [Frac; 3]) {
    (
        fr("-2/(bt*(al-4*bt)^3)"),
        [
            fr("(al-1)*lm1+bt*(2*bt-2*al+1)"),
            fr("2*(al*(al-1)-6*al*bt+4*bt)*lm1+(10*bt+1)*al*bt-2*bt^2*(2+3*bt)"),
            fr("4*(2*al-1)*lm1^2-2*(al^2+6*bt*al-4*bt)*lm1-al*bt*lm2+2*al^2*bt+4*(al-1)*bt^2"),
        ],
    )
}

/// The three factors of the mother relation with the print defects
/// undone: the second factor's tail is `2 bt^2 (3 + 2bt)` (the digits are
/// transposed in the display; the parameter values of the dihedral family
/// with six axes satisfy the corrected factor and not the printed one),
/// and the prefactor is `+2/(bt (al-4bt)^3)`.
pub fn mother_factors() -> (Frac, [Frac; 3]) {
    (
        fr("2/(bt*(al-4*bt)^3)"),
        [
            fr("(al-1)*lm1+bt*(2*bt-2*al+1)"),
            fr("2*(al*(al-1)-6*al*bt+4*bt)*lm1+(10*bt+1)*al*bt-2*bt^2*(3+2*bt)"),
            fr("4*(2*al-1)*lm1^2-2*(al^2+6*bt*al-4*bt)*lm1-al*bt*lm2+2*al^2*bt+4*(al-1)*bt^2"),
        ],
    )
}

/// Bilinear-form displays, in the symmetric-lambda variables `lm1, lm2`.
pub mod form_values {
    use super::fr;
    use crate::exact::Frac;

    /// `(a_i, s)`.
    pub fn a_s() -> Frac {
        fr("lm1*(1-bt)-bt")
    }

    /// `(a_i, s_2)` for `i = -2, 0, 2`.
    pub fn a_s2_even() -> Frac {
        fr("lm2*(1-bt)-bt")
    }

    /// `(a_i, s_2)` for `i = -1, 1`.
    pub fn a_s2_odd() -> Frac {
        fr("bt*lm2-(2*bt-1)*lm1-bt")
    }

    /// `(s, s)`.
    pub fn s_s() -> Frac {
        fr("(bt*(al-bt)*lm2-2*(al-1)*lm1^2+2*(al+2*bt^2-4*bt)*lm1-bt*al+5*bt^2)/2")
    }

    /// `(s, s_2)`; the prefactor is printed unreduced.
    pub fn s_s2() -> Frac {
        fr("(((al-2*bt)*(al-bt))/((al-4*bt)*(al-2*bt)*(al-bt)))/2").mul(&fr(
            "bt*(-6*al*lm1+4*al^2-(2*bt+3)*al+4*bt^2+6*bt)*lm2+8*(2*al-1)*lm1^3\
             -4*(al+2)*(2*al-1)*lm1^2+2*(4*al^2+(2*bt^2-1)*al-8*bt^3+12*bt^2-4*bt)*lm1\
             -4*bt*al^2+bt*(6*bt+1)*al-20*bt^3+2*bt^2",
        ))
    }

    /// `(s_2, s_2)`.
    pub fn s2_s2() -> Frac {
        fr("1/(2*bt*(al-4*bt)^2*(al-bt))").mul(&fr(
            "-2*bt*(al-4*bt)*(al-bt)*(al^2-(3*bt+1)*al+4*bt)*lm2^2\
             +(4*(al^4-(9*bt+2)*al^3+(22*bt^2+19*bt+1)*al^2+2*bt*(8*bt^2-21*bt-4)*al-8*bt^3+16*bt^2)*lm1^2\
             +2*bt*(2*(2*bt-1)*al^3-bt*(74*bt+11)*al^2+2*bt*(2*bt^2+47*bt+4)*al-32*bt^2)*lm1\
             +2*bt*(2*bt+1)*al^4+2*bt^2*(6*bt-11)*al^3+bt^2*(12*bt^2+88*bt-1)*al^2\
             +4*bt^3*(14*bt^2-61*bt+1)*al-48*bt^6+128*bt^5+12*bt^4)*lm2\
             +16*(2*al-1)*(al^2-(6*bt+1)*al+4*bt)*lm1^4\
             -8*(2*al-1)*(al^3-(6*bt-1)*al^2-(2*bt+1)*(5*bt+2)*al+4*bt^3+6*bt^2+8*bt)*lm1^3\
             -4*(-3*al^4+(20*bt^2+17*bt+4)*al^3-(8*bt^3-40*bt^2+6*bt+1)*al^2+2*bt*(2*bt^2-40*bt-1)*al+28*bt^2)*lm1^2\
             +2*bt*(6*(6*bt+1)*al^3+(58*bt^2-33*bt-2)*al^2-2*bt*(2*bt^2+43*bt-2)*al+32*bt^2)*lm1\
             -4*bt^2*al^4-2*bt^2*(2*bt+1)*al^3-bt^2*(84*bt^2-22*bt-1)*al^2+4*bt^3*(34*bt^2+7*bt-1)*al-80*bt^6-12*bt^4",
        ))
    }

    /// `(s_2, s_2^f)`.
    pub fn s2_s2f() -> Frac {
        fr("1/(2*(al-4*bt)^2*(al-bt))").mul(&fr(
            "-2*bt*al*(al-4*bt)*(al-bt)*lm2^2\
             +(8*(al^3-3*bt*al^2+bt*(8*bt+1)*al-4*bt^2)*lm1^2\
             -2*((26*bt+3)*al^3-(70*bt^2+27*bt+1)*al^2+2*bt*(46*bt^2+27*bt+3)*al-48*bt^3-8*bt^2)*lm1\
             +16*bt*al^4-2*bt*(22*bt+3)*al^3+bt*(72*bt^2-2*bt+1)*al^2-4*bt^3*(22*bt-7)*al+80*bt^5-32*bt^4-4*bt^3)*lm2\
             -32*al*(2*al-1)*lm1^4+8*(2*al-1)*(6*al^2-(10*bt-3)*al+12*bt^2+2*bt)*lm1^3\
             -4*(8*al^4-20*(bt-1)*al^3+(24*bt^2-32*bt-15)*al^2+2*(26*bt^2+14*bt+1)*al-32*bt^2-4*bt)*lm1^2\
             +2*(16*al^4+2*(2*bt^2-9*bt-4)*al^3-(36*bt^3-14*bt^2+8*bt-1)*al^2+2*bt*(48*bt^3-2*bt^2+27*bt+1)*al\
             -64*bt^5+64*bt^4-64*bt^3-8*bt^2)*lm1\
             -16*bt*al^4+4*bt*(11*bt+2)*al^3-bt*(72*bt^2+8*bt+1)*al^2+4*bt^3*(22*bt-5)*al-80*bt^5+32*bt^4+4*bt^3",
        ))
    }
}
