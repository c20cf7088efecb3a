//! The fixed six-variable alphabet of the parameter ring.

use serde::{Deserialize, Serialize};
use std::fmt;

pub const NVARS: usize = 6;

/// A variable of the parameter ring, in canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Al = 0,
    Bt = 1,
    Lm1 = 2,
    Lm1f = 3,
    Lm2 = 4,
    Lm2f = 5,
}

pub const ALL_VARS: [Var; NVARS] = [Var::Al, Var::Bt, Var::Lm1, Var::Lm1f, Var::Lm2, Var::Lm2f];

impl Var {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Al => "al",
            Var::Bt => "bt",
            Var::Lm1 => "lm1",
            Var::Lm1f => "lm1f",
            Var::Lm2 => "lm2",
            Var::Lm2f => "lm2f",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        ALL_VARS.iter().copied().find(|v| v.name() == name)
    }

    pub fn from_index(i: usize) -> Var {
        ALL_VARS[i]
    }

    /// The flip exchanges the two generators: `lm1 <-> lm1f`, `lm2 <-> lm2f`.
    pub fn flip(self) -> Var {
        match self {
            Var::Lm1 => Var::Lm1f,
            Var::Lm1f => Var::Lm1,
            Var::Lm2 => Var::Lm2f,
            Var::Lm2f => Var::Lm2,
            other => other,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
