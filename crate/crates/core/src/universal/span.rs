//! Index conventions for the spanning set
//! `B = {a_-2, a_-1, a_0, a_1, a_2, s, s_2, s_2^f}` with
//! `s = a_0 o a_1`, `s_2 = a_0 o a_2`, `s_2^f = a_-1 o a_1`,
//! where `x o y = xy - bt(x + y)`.

use crate::algebra::Element;
use crate::exact::Frac;

pub const AM2: usize = 0;
pub const AM1: usize = 1;
pub const A0: usize = 2;
pub const A1: usize = 3;
pub const A2: usize = 4;
pub const S: usize = 5;
pub const S2: usize = 6;
pub const S2F: usize = 7;
pub const DIM: usize = 8;

pub const LABELS: [&str; DIM] = ["am2", "am1", "a0", "a1", "a2", "s", "s2", "s2f"];

pub fn labels() -> Vec<String> {
    LABELS.iter().map(|s| s.to_string()).collect()
}

pub fn unit(i: usize) -> Element {
    Element::unit(DIM, i)
}

/// `tau(a_0)` acts on the spanning set as the coordinate permutation
/// `a_i <-> a_-i`, fixing `s`, `s_2` and `s_2^f`.
pub fn tau0_apply(x: &Element) -> Element {
    let mut y = x.clone();
    y.coeffs.swap(AM2, A2);
    y.coeffs.swap(AM1, A1);
    y
}

/// Axis index of the basis slot, when it is one of the five axes.
pub fn axis_index(slot: usize) -> Option<i64> {
    match slot {
        AM2 => Some(-2),
        AM1 => Some(-1),
        A0 => Some(0),
        A1 => Some(1),
        A2 => Some(2),
        _ => None,
    }
}

/// Scaled basis combination helper.
pub fn combo(parts: &[(Frac, usize)]) -> Element {
    let mut e = Element::zero(DIM);
    for (c, i) in parts {
        e[*i] = e[*i].add(c);
    }
    e
}
