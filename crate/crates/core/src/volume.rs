//! Ratio of simplicial volumes modulo ℤ, for surfaces.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::surface::Surface;

/// An exact rational in [0, 1), kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RatioRepr")]
pub struct RatioMod1 {
    numerator: u64,
    denominator: u64,
}

#[derive(Deserialize)]
struct RatioRepr {
    numerator: u64,
    denominator: u64,
}

impl TryFrom<RatioRepr> for RatioMod1 {
    type Error = String;

    fn try_from(r: RatioRepr) -> std::result::Result<Self, String> {
        if r.denominator == 0 {
            return Err("zero denominator".into());
        }
        let reduced = RatioMod1::frac(r.numerator, r.denominator);
        if reduced.numerator != r.numerator || reduced.denominator != r.denominator {
            return Err(format!("{}/{} is not a reduced fraction in [0,1)", r.numerator, r.denominator));
        }
        Ok(reduced)
    }
}

impl RatioMod1 {
    pub const ZERO: RatioMod1 = RatioMod1 { numerator: 0, denominator: 1 };

    /// Fractional part of p/q.
    pub fn frac(p: u64, q: u64) -> Self {
        assert!(q > 0, "zero denominator");
        let r = p % q;
        let g = r.gcd(&q);
        RatioMod1 { numerator: r / g, denominator: q / g }
    }

    pub fn numerator(self) -> u64 {
        self.numerator
    }

    pub fn denominator(self) -> u64 {
        self.denominator
    }

    pub fn is_zero(self) -> bool {
        self.numerator == 0
    }
}

impl fmt::Display for RatioMod1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// ‖Σ_g‖: zero for the sphere and torus, 4g − 4 = −2χ for g >= 2.
///
/// The value for g >= 2 is Gromov's normalization, imported as an external
/// fact. [`volume_ratio`] does not depend on it.
pub fn simplicial_volume(s: Surface) -> u64 {
    match s.genus() {
        0 | 1 => 0,
        g => 4 * u64::from(g) - 4,
    }
}

/// ‖Σ_G‖/‖Σ_g‖ mod ℤ = frac((G − 1)/(g − 1)), defined for g >= 2.
pub fn volume_ratio(source: Surface, target: Surface) -> Result<RatioMod1> {
    if target.genus() <= 1 {
        return Err(Error::ZeroTargetVolume(target.genus()));
    }
    let source_part = u64::from(source.genus().saturating_sub(1));
    // ‖Σ_0‖ = ‖Σ_1‖ = 0
    if source.genus() <= 1 {
        return Ok(RatioMod1::ZERO);
    }
    Ok(RatioMod1::frac(source_part, u64::from(target.genus()) - 1))
}
