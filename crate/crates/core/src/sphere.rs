//! φ(S^m, S^n) for standard spheres, as far as it is settled.
//!
//! Outcomes that are open are reported as [`SphereStatus::AtLeast`] or
//! [`SphereStatus::Unknown`] rather than guessed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "value", rename_all = "kebab-case")]
pub enum SphereStatus {
    Exact(u32),
    ExactlyInfinite,
    /// Lower bound; finiteness not known.
    AtLeast(u32),
    Unknown,
}

/// The statement that decided a [`SpherePhi`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// m = n, the identity map.
    Identity,
    /// m = 2n − 1 with n ∈ {2, 4, 8}: the Hopf fibrations.
    HopfFibration,
    /// (4,3), (8,5), (16,9): suspended Hopf maps with two critical points.
    SuspendedHopf,
    /// m <= 2n − 3.
    LowCodimension,
    /// m = 2n − 2 with n ∉ {2, 3, 5, 9}.
    CodimensionTwoBelowMiddle,
    /// n <= m < 2n − 1 forces at least two critical points.
    BelowMiddleLowerBound,
    /// m = 2n − 1 off the Hopf dimensions: no fibration, so at least one.
    NonHopfFibration,
    /// No statement applies.
    Unclassified,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Identity => "identity",
            Provenance::HopfFibration => "hopf-fibration",
            Provenance::SuspendedHopf => "suspended-hopf",
            Provenance::LowCodimension => "low-codimension",
            Provenance::CodimensionTwoBelowMiddle => "codimension-two-below-middle",
            Provenance::BelowMiddleLowerBound => "below-middle-lower-bound",
            Provenance::NonHopfFibration => "non-hopf-fibration",
            Provenance::Unclassified => "unclassified",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpherePhi {
    #[serde(flatten)]
    pub status: SphereStatus,
    pub provenance: Provenance,
}

impl fmt::Display for SpherePhi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            SphereStatus::Exact(v) => write!(f, "exact {v}")?,
            SphereStatus::ExactlyInfinite => f.write_str("infinite")?,
            SphereStatus::AtLeast(v) => write!(f, "at-least {v}")?,
            SphereStatus::Unknown => f.write_str("unknown")?,
        }
        write!(f, " ({})", self.provenance.label())
    }
}

const HOPF_PAIRS: [(u32, u32); 3] = [(3, 2), (7, 4), (15, 8)];
const SUSPENDED_HOPF_PAIRS: [(u32, u32); 3] = [(4, 3), (8, 5), (16, 9)];
const MIDDLE_FINITE_CANDIDATES: [u32; 4] = [2, 3, 5, 9];

pub fn classify_sphere_pair(m: u32, n: u32) -> Result<SpherePhi> {
    if n < 2 || m < n {
        return Err(Error::OutOfRange { m, n });
    }
    let out = |status, provenance| Ok(SpherePhi { status, provenance });
    let (m64, n64) = (u64::from(m), u64::from(n));

    if m == n {
        return out(SphereStatus::Exact(0), Provenance::Identity);
    }
    if HOPF_PAIRS.contains(&(m, n)) {
        return out(SphereStatus::Exact(0), Provenance::HopfFibration);
    }
    if SUSPENDED_HOPF_PAIRS.contains(&(m, n)) {
        return out(SphereStatus::Exact(2), Provenance::SuspendedHopf);
    }
    if m64 + 3 <= 2 * n64 {
        return out(SphereStatus::ExactlyInfinite, Provenance::LowCodimension);
    }
    if m64 + 2 == 2 * n64 {
        return if MIDDLE_FINITE_CANDIDATES.contains(&n) {
            out(SphereStatus::AtLeast(2), Provenance::BelowMiddleLowerBound)
        } else {
            out(SphereStatus::ExactlyInfinite, Provenance::CodimensionTwoBelowMiddle)
        };
    }
    if m64 + 1 == 2 * n64 {
        // the Hopf dimensions n ∈ {2, 4, 8} were answered above
        return out(SphereStatus::AtLeast(1), Provenance::NonHopfFibration);
    }
    out(SphereStatus::Unknown, Provenance::Unclassified)
}
