//! Closed orientable surfaces and Riemann–Hurwitz bookkeeping.
//!
//! Everything here is exact signed integer arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A closed orientable surface, identified by its genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Surface {
    genus: u32,
}

impl Surface {
    pub const SPHERE: Surface = Surface { genus: 0 };
    pub const TORUS: Surface = Surface { genus: 1 };

    pub const fn new(genus: u32) -> Self {
        Surface { genus }
    }

    pub fn from_euler(chi: i64) -> Result<Self> {
        genus_from_euler(chi).map(Surface::new)
    }

    pub const fn genus(self) -> u32 {
        self.genus
    }

    pub fn euler(self) -> i64 {
        euler_char(self.genus)
    }

    pub fn is_sphere(self) -> bool {
        self.genus == 0
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ_{}", self.genus)
    }
}

pub fn euler_char(genus: u32) -> i64 {
    2 - 2 * i64::from(genus)
}

pub fn genus_from_euler(chi: i64) -> Result<u32> {
    if chi % 2 != 0 {
        return Err(Error::OddEuler(chi));
    }
    if chi > 2 {
        return Err(Error::NotASurface(chi));
    }
    u32::try_from((2 - chi) / 2).map_err(|_| Error::Overflow("genus_from_euler"))
}

/// Checks that `chi` is the Euler characteristic of some closed orientable surface.
pub(crate) fn check_surface_euler(chi: i64) -> Result<()> {
    genus_from_euler(chi).map(|_| ())
}

/// Multiset of local degrees at the critical points of a branched cover.
///
/// Stored in non-increasing order; every entry is at least 2.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct RamificationProfile {
    multiplicities: Vec<u32>,
}

impl RamificationProfile {
    pub fn new(mut multiplicities: Vec<u32>) -> Result<Self> {
        if let Some(&m) = multiplicities.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidMultiplicity(m));
        }
        multiplicities.sort_unstable_by(|a, b| b.cmp(a));
        Ok(RamificationProfile { multiplicities })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Number of critical points.
    pub fn len(&self) -> usize {
        self.multiplicities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicities.is_empty()
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn max_multiplicity(&self) -> Option<u32> {
        self.multiplicities.first().copied()
    }

    /// Total ramification Σ(m_i − 1).
    pub fn total_ramification(&self) -> i64 {
        self.multiplicities.iter().map(|&m| i64::from(m) - 1).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.multiplicities.iter().copied()
    }
}

impl TryFrom<Vec<u32>> for RamificationProfile {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        RamificationProfile::new(v)
    }
}

impl From<RamificationProfile> for Vec<u32> {
    fn from(p: RamificationProfile) -> Self {
        p.multiplicities
    }
}

impl fmt::Display for RamificationProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.multiplicities.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// χ′ = d·χ − Σ(m_i − 1).
pub fn hurwitz_euler(target_chi: i64, degree: u32, profile: &RamificationProfile) -> Result<i64> {
    if target_chi % 2 != 0 {
        return Err(Error::OddEuler(target_chi));
    }
    if degree == 0 {
        return Err(Error::ZeroDegree);
    }
    if let Some(max) = profile.max_multiplicity() {
        if max > degree {
            return Err(Error::DegreeTooSmall { degree, max_multiplicity: max });
        }
    }
    i64::from(degree)
        .checked_mul(target_chi)
        .and_then(|v| v.checked_sub(profile.total_ramification()))
        .ok_or(Error::Overflow("hurwitz_euler"))
}

/// A candidate branched cover: degree, critical multiplicities, target, and
/// the Euler characteristic of the source forced by Riemann–Hurwitz.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CoveringDataRepr")]
pub struct CoveringData {
    degree: u32,
    profile: RamificationProfile,
    target_genus: u32,
    source_euler: i64,
}

#[derive(Deserialize)]
struct CoveringDataRepr {
    degree: u32,
    profile: RamificationProfile,
    target_genus: u32,
    source_euler: i64,
}

impl TryFrom<CoveringDataRepr> for CoveringData {
    type Error = Error;

    fn try_from(r: CoveringDataRepr) -> Result<Self> {
        CoveringData::with_source_euler(Surface::new(r.target_genus), r.degree, r.profile, r.source_euler)
    }
}

impl CoveringData {
    /// Builds the datum, deriving the source Euler characteristic.
    pub fn new(target: Surface, degree: u32, profile: RamificationProfile) -> Result<Self> {
        let source_euler = hurwitz_euler(target.euler(), degree, &profile)?;
        Ok(CoveringData { degree, profile, target_genus: target.genus(), source_euler })
    }

    /// Builds the datum and checks it against a claimed source Euler characteristic.
    pub fn with_source_euler(
        target: Surface,
        degree: u32,
        profile: RamificationProfile,
        source_euler: i64,
    ) -> Result<Self> {
        let data = Self::new(target, degree, profile)?;
        if data.source_euler != source_euler {
            return Err(Error::InconsistentCovering(format!(
                "Riemann–Hurwitz gives source Euler characteristic {}, not {}",
                data.source_euler, source_euler
            )));
        }
        Ok(data)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn profile(&self) -> &RamificationProfile {
        &self.profile
    }

    pub fn target(&self) -> Surface {
        Surface::new(self.target_genus)
    }

    pub fn source_euler(&self) -> i64 {
        self.source_euler
    }

    /// Number of critical points k.
    pub fn critical_points(&self) -> usize {
        self.profile.len()
    }

    /// Defects λ_i = d − m_i, in the same order as the profile.
    pub fn defects(&self) -> impl Iterator<Item = i64> + '_ {
        self.profile.iter().map(move |m| i64::from(self.degree) - i64::from(m))
    }

    /// λ = Σ λ_i.
    pub fn total_defect(&self) -> i64 {
        self.defects().sum()
    }
}

impl fmt::Display for CoveringData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d={} profile={}", self.degree, self.profile)
    }
}
