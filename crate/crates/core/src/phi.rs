//! The minimal number of critical points φ(Σ′, Σ) of a smooth map between
//! closed orientable surfaces.
//!
//! A map with finitely many critical points is a branched cover, so φ is the
//! least number of ramification points over all branched covers Σ′ → Σ.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::patterson::{admissible_defect, greedy_profile};
use crate::surface::{check_surface_euler, CoveringData, RamificationProfile, Surface};

/// Why φ is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum InfiniteCase {
    /// χ′ > χ: no branched cover can raise the Euler characteristic.
    EulerIncrease,
    /// 2 + 2χ <= χ′ < χ <= −2: any cover would have degree below 2.
    BelowDoubleCover,
}

impl InfiniteCase {
    /// Numeric case tag used in the machine-readable outputs.
    pub fn tag(self) -> u8 {
        match self {
            InfiniteCase::EulerIncrease => 1,
            InfiniteCase::BelowDoubleCover => 4,
        }
    }
}

impl From<InfiniteCase> for u8 {
    fn from(c: InfiniteCase) -> u8 {
        c.tag()
    }
}

impl TryFrom<u8> for InfiniteCase {
    type Error = String;

    fn try_from(v: u8) -> std::result::Result<Self, String> {
        match v {
            1 => Ok(InfiniteCase::EulerIncrease),
            4 => Ok(InfiniteCase::BelowDoubleCover),
            other => Err(format!("unknown infinite case tag {other}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum PhiResult {
    Finite {
        k: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        witness: Option<CoveringData>,
    },
    Infinite {
        case: InfiniteCase,
    },
}

impl PhiResult {
    pub fn value(&self) -> Option<u32> {
        match self {
            PhiResult::Finite { k, .. } => Some(*k),
            PhiResult::Infinite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&CoveringData> {
        match self {
            PhiResult::Finite { witness, .. } => witness.as_ref(),
            PhiResult::Infinite { .. } => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, PhiResult::Infinite { .. })
    }

    fn finite(witness: CoveringData) -> Self {
        PhiResult::Finite { k: witness.critical_points() as u32, witness: Some(witness) }
    }
}

impl fmt::Display for PhiResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PhiResult::Finite { k, .. } => write!(f, "{k}"),
            PhiResult::Infinite { case } => write!(f, "infinite (case {})", case.tag()),
        }
    }
}

/// |χ′| = a|χ| + b with 0 <= b < |χ|.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisionForm {
    pub a: u64,
    pub b: u64,
}

impl DivisionForm {
    pub fn new(abs_src: u64, abs_tgt: u64) -> Self {
        assert!(abs_tgt > 0, "division by a zero Euler characteristic");
        let (a, b) = abs_src.div_rem(&abs_tgt);
        DivisionForm { a, b }
    }

    pub fn reconstruct(self, abs_tgt: u64) -> u64 {
        self.a * abs_tgt + self.b
    }
}

fn check_hyperbolic_target(chi_tgt: i64) -> Result<()> {
    check_surface_euler(chi_tgt)?;
    if chi_tgt > -2 {
        return Err(Error::TargetNotHyperbolic(chi_tgt));
    }
    Ok(())
}

/// Degrees d >= 1 with (χ′ − k)/(χ − k) <= d <= (χ′ + k)/χ, for χ <= −2.
fn degree_window(chi_src: i64, chi_tgt: i64, k: u32) -> (i64, i64) {
    let k = i64::from(k);
    let lo = Integer::div_ceil(&(chi_src - k), &(chi_tgt - k));
    let hi = Integer::div_floor(&(chi_src + k), &chi_tgt);
    (lo.max(1), hi)
}

/// Whether some degree d >= 1 admits a cover with exactly `k` critical
/// points from a surface of Euler characteristic `chi_src` onto one of
/// `chi_tgt`, i.e. ⌈(χ′ − k)/(χ − k)⌉ <= (χ′ + k)/χ with d >= 1.
pub fn has_admissible_degree(chi_src: i64, chi_tgt: i64, k: u32) -> Result<bool> {
    check_hyperbolic_target(chi_tgt)?;
    check_surface_euler(chi_src)?;
    let (lo, hi) = degree_window(chi_src, chi_tgt, k);
    Ok(lo <= hi)
}

/// φ for a hyperbolic target (χ <= −2), with a witness when finite.
pub fn minimal_k(chi_src: i64, chi_tgt: i64) -> Result<PhiResult> {
    check_hyperbolic_target(chi_tgt)?;
    check_surface_euler(chi_src)?;
    let target = Surface::from_euler(chi_tgt)?;

    if chi_src == chi_tgt {
        return Ok(PhiResult::finite(CoveringData::new(target, 1, RamificationProfile::empty())?));
    }
    if chi_src > chi_tgt {
        return Ok(PhiResult::Infinite { case: InfiniteCase::EulerIncrease });
    }
    if chi_src > 2 * chi_tgt {
        return Ok(PhiResult::Infinite { case: InfiniteCase::BelowDoubleCover });
    }

    // Terminates: k = ⌈b/(a − 1)⌉ < |χ| always passes when χ′ <= 2χ.
    let mut k = 0u32;
    loop {
        let (lo, hi) = degree_window(chi_src, chi_tgt, k);
        if lo <= hi {
            let degree = u32::try_from(lo).map_err(|_| Error::Overflow("minimal_k"))?;
            let lambda =
                admissible_defect(chi_src, chi_tgt, k, degree).expect("degree window guarantees 0 <= λ <= k(d − 2)");
            let profile = greedy_profile(degree, k, lambda).expect("λ within greedy range");
            return Ok(PhiResult::finite(CoveringData::new(target, degree, profile)?));
        }
        k += 1;
    }
}

/// ⌈b/(a − 1)⌉ where |χ′| = a|χ| + b, valid once |χ′| >= 2|χ| and χ <= −2.
pub fn closed_form_phi(chi_src: i64, chi_tgt: i64) -> Result<u64> {
    check_surface_euler(chi_src)?;
    check_surface_euler(chi_tgt)?;
    let (abs_src, abs_tgt) = (chi_src.unsigned_abs(), chi_tgt.unsigned_abs());
    if chi_tgt > -2 || chi_src > 0 || abs_src < 2 * abs_tgt {
        return Err(Error::OutOfDomain { chi_src, chi_tgt });
    }
    let DivisionForm { a, b } = DivisionForm::new(abs_src, abs_tgt);
    Ok(b.div_ceil(a - 1))
}

/// φ(source, target) for every pair of closed orientable surfaces.
pub fn phi(source: Surface, target: Surface) -> PhiResult {
    let (gs, gt) = (source.genus(), target.genus());
    let identity = || PhiResult::finite(CoveringData::new(target, 1, RamificationProfile::empty()).unwrap());
    match gt {
        0 if gs == 0 => identity(),
        0 => {
            // full-cycle cover: d = 3 + |χ′| (odd), profile [d, d, d]
            let degree = 3 + (source.euler().unsigned_abs() as u32);
            let profile = RamificationProfile::new(vec![degree; 3]).unwrap();
            PhiResult::finite(CoveringData::new(target, degree, profile).unwrap())
        }
        1 if gs == 0 => PhiResult::Infinite { case: InfiniteCase::EulerIncrease },
        1 if gs == 1 => identity(),
        1 => {
            let degree = 2 * gs - 1;
            let profile = RamificationProfile::new(vec![degree]).unwrap();
            PhiResult::finite(CoveringData::new(target, degree, profile).unwrap())
        }
        _ => minimal_k(source.euler(), target.euler()).expect("hyperbolic target"),
    }
}

/// One row per source genus 0..=max_source_genus.
pub fn phi_table(target_genus: u32, max_source_genus: u32) -> Vec<(u32, PhiResult)> {
    let target = Surface::new(target_genus);
    (0..=max_source_genus).map(|g| (g, phi(Surface::new(g), target))).collect()
}
