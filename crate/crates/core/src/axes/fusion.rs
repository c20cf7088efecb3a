//! The Ising fusion rules: eigenvalue set `{1, 0, alpha, beta}` with its
//! star map and Z/2-grading `{1, 0, alpha} u {beta}`.

use super::AxisError;
use crate::exact::Frac;

pub const EIG_ONE: usize = 0;
pub const EIG_ZERO: usize = 1;
pub const EIG_ALPHA: usize = 2;
pub const EIG_BETA: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionRules {
    /// `[1, 0, alpha, beta]` as field elements.
    pub eigenvalues: [Frac; 4],
    /// `star[i][j]` = indices of the eigenvalues allowed in the product of
    /// an `i`-eigenvector and a `j`-eigenvector.
    star: [[&'static [usize]; 4]; 4],
}

const E: &[usize] = &[];
const S1: &[usize] = &[EIG_ONE];
const S0: &[usize] = &[EIG_ZERO];
const SA: &[usize] = &[EIG_ALPHA];
const SB: &[usize] = &[EIG_BETA];
const S10: &[usize] = &[EIG_ONE, EIG_ZERO];
const S10A: &[usize] = &[EIG_ONE, EIG_ZERO, EIG_ALPHA];

/// The star table: rows/columns ordered `1, 0, alpha, beta`.
const ISING_STAR: [[&[usize]; 4]; 4] = [
    [S1, E, SA, SB],
    [E, S0, SA, SB],
    [SA, SA, S10, SB],
    [SB, SB, SB, S10A],
];

impl FusionRules {
    /// Ising fusion rules at the given parameter values. The eigenvalues
    /// must be pairwise distinct in the working field.
    pub fn ising(alpha: Frac, beta: Frac) -> Result<FusionRules, AxisError> {
        let one = Frac::one();
        let zero = Frac::zero();
        let vals = [one, zero, alpha, beta];
        for i in 0..4 {
            for j in (i + 1)..4 {
                if vals[i] == vals[j] {
                    return Err(AxisError::DegenerateEigenvalues(format!(
                        "{} = {}",
                        vals[i], vals[j]
                    )));
                }
            }
        }
        Ok(FusionRules {
            eigenvalues: vals,
            star: ISING_STAR,
        })
    }

    pub fn alpha(&self) -> &Frac {
        &self.eigenvalues[EIG_ALPHA]
    }

    pub fn beta(&self) -> &Frac {
        &self.eigenvalues[EIG_BETA]
    }

    pub fn star(&self, i: usize, j: usize) -> &'static [usize] {
        self.star[i][j]
    }

    /// Z/2-grading: the even part is `{1, 0, alpha}`, the odd part `{beta}`.
    pub fn is_even(&self, i: usize) -> bool {
        i != EIG_BETA
    }

    /// The star map is symmetric and respects the grading.
    pub fn grading_consistent(&self) -> bool {
        for i in 0..4 {
            for j in 0..4 {
                if self.star[i][j] != self.star[j][i] {
                    return false;
                }
                let even = self.is_even(i) == self.is_even(j);
                for &k in self.star[i][j] {
                    if self.is_even(k) != even {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Var;

    #[test]
    fn symbolic_rules_are_graded() {
        let f = FusionRules::ising(Frac::var(Var::Al), Frac::var(Var::Bt)).unwrap();
        assert!(f.grading_consistent());
        assert_eq!(f.star(EIG_BETA, EIG_BETA), &[EIG_ONE, EIG_ZERO, EIG_ALPHA]);
        assert_eq!(f.star(EIG_ONE, EIG_ZERO), &[] as &[usize]);
    }

    #[test]
    fn degenerate_values_rejected() {
        assert!(FusionRules::ising(Frac::one(), Frac::rat(1, 32)).is_err());
        assert!(FusionRules::ising(Frac::rat(1, 4), Frac::rat(1, 4)).is_err());
        assert!(FusionRules::ising(Frac::zero(), Frac::rat(1, 32)).is_err());
        assert!(FusionRules::ising(Frac::rat(1, 4), Frac::one()).is_err());
    }
}
