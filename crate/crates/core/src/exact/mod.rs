//! Exact scalar arithmetic: rationals, sparse multivariate polynomials in
//! the fixed variable set `{al, bt, lm1, lm1f, lm2, lm2f}`, and their
//! normalized fraction field.

mod frac;
mod gcd;
mod parse;
mod poly;
mod ring;
mod vars;

pub use frac::Frac;
pub use gcd::{poly_divides, poly_gcd};
pub use parse::{parse_frac, parse_poly, ParseError};
pub use poly::{resultant_in, Mono, Poly};
pub use ring::RingSpec;
pub use vars::{Var, NVARS};

use thiserror::Error;

pub type Rat = num::BigRational;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("gcd of two zero polynomials")]
    GcdBothZero,
    #[error("substitution makes a denominator vanish: {0}")]
    Pole(String),
    #[error("{0} is constant in the resultant variable")]
    ResultantConstant(String),
    #[error("negative exponent")]
    NegativeExponent,
}

/// Shorthand: an exact rational from a numerator/denominator pair.
pub fn rat(n: i64, d: i64) -> Rat {
    use num::BigInt;
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand: an exact integer rational.
pub fn int(n: i64) -> Rat {
    use num::BigInt;
    Rat::from(BigInt::from(n))
}
