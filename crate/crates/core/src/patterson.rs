//! Patterson's existence criterion and enumeration of covering data solving
//! the Hurwitz system
//!
//! ```text
//! 0 <= λ = d(k − χ) + χ′ − k <= k(d − 2)
//! ```
//!
//! with λ split as λ = Σλ_i, 0 <= λ_i <= d − 2, m_i = d − λ_i.

use crate::error::{Error, Result};
use crate::surface::{check_surface_euler, CoveringData, RamificationProfile, Surface};

/// Whether an enumerated datum is known to be realized by an actual cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Realizability {
    /// Target of genus >= 1: Patterson's theorem guarantees a cover.
    Guaranteed,
    /// Sphere target: existence has to be settled by a monodromy search.
    RequiresMonodromyCheck,
}

impl Realizability {
    pub fn for_target(target: Surface) -> Self {
        if target.is_sphere() {
            Realizability::RequiresMonodromyCheck
        } else {
            Realizability::Guaranteed
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub realizability: Realizability,
    /// Sorted by degree, then by profile.
    pub data: Vec<CoveringData>,
}

/// Patterson's criterion: Σ(m_i − 1) even and d >= max m_i, for targets of genus >= 1.
pub fn patterson_feasible(target: Surface, degree: u32, profile: &RamificationProfile) -> Result<bool> {
    if target.is_sphere() {
        return Err(Error::SphereTargetNotCovered);
    }
    let parity_ok = profile.total_ramification() % 2 == 0;
    let degree_ok = degree >= profile.max_multiplicity().unwrap_or(1);
    Ok(parity_ok && degree_ok)
}

/// λ = d(k − χ) + χ′ − k for the given data, or `None` if it falls outside [0, k(d − 2)].
pub fn admissible_defect(chi_src: i64, chi_tgt: i64, k: u32, degree: u32) -> Option<i64> {
    let (d, k) = (i64::from(degree), i64::from(k));
    let lambda = d.checked_mul(k - chi_tgt)?.checked_add(chi_src - k)?;
    let cap = k.checked_mul(d - 2)?;
    (lambda >= 0 && lambda <= cap).then_some(lambda)
}

/// Every covering datum over `target` with source Euler characteristic
/// `chi_src`, exactly `k` critical points and degree in `1..=d_max`.
pub fn enumerate_covering_data(chi_src: i64, target: Surface, k: u32, d_max: u32) -> Result<Enumeration> {
    check_surface_euler(chi_src)?;
    let chi_tgt = target.euler();
    let mut data = Vec::new();
    for degree in 1..=d_max {
        let Some(lambda) = admissible_defect(chi_src, chi_tgt, k, degree) else {
            continue;
        };
        let before = data.len();
        for_each_defect_split(lambda, k, i64::from(degree) - 2, &mut |defects| {
            let profile = profile_from_defects(degree, defects);
            data.push(CoveringData::new(target, degree, profile).expect("defects within bounds"));
        });
        data[before..].sort_by(|a, b| a.profile().cmp(b.profile()));
    }
    Ok(Enumeration { realizability: Realizability::for_target(target), data })
}

/// Calls `f` once per multiset {λ_1, …, λ_k} with 0 <= λ_i <= `cap` summing to
/// `lambda`. Each multiset is produced once, as a non-increasing sequence.
pub fn for_each_defect_split(lambda: i64, k: u32, cap: i64, f: &mut impl FnMut(&[i64])) {
    fn go(rest: i64, slots: u32, bound: i64, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if slots == 0 {
            if rest == 0 {
                f(buf);
            }
            return;
        }
        if rest > bound * i64::from(slots) {
            return;
        }
        let hi = rest.min(bound);
        // the remaining slots must absorb rest − part with parts <= part
        for part in (0..=hi).rev() {
            if rest - part > part * i64::from(slots - 1) {
                break;
            }
            buf.push(part);
            go(rest - part, slots - 1, part, buf, f);
            buf.pop();
        }
    }
    if lambda < 0 || (k > 0 && cap < 0) {
        return;
    }
    go(lambda, k, cap, &mut Vec::with_capacity(k as usize), f);
}

fn profile_from_defects(degree: u32, defects: &[i64]) -> RamificationProfile {
    let ms = defects.iter().map(|&l| (i64::from(degree) - l) as u32).collect();
    RamificationProfile::new(ms).expect("defect <= d − 2 gives multiplicity >= 2")
}

/// The decomposition with the fewest distinct multiplicities: fill λ_i = d − 2
/// first, then one remainder, then zeros. Returns `None` if λ is out of range.
pub fn greedy_profile(degree: u32, k: u32, lambda: i64) -> Option<RamificationProfile> {
    let cap = i64::from(degree) - 2;
    if lambda < 0 || (k == 0 && lambda != 0) || (k > 0 && (cap < 0 || lambda > cap * i64::from(k))) {
        return None;
    }
    let mut defects = Vec::with_capacity(k as usize);
    let mut rest = lambda;
    for _ in 0..k {
        let part = rest.min(cap);
        defects.push(part);
        rest -= part;
    }
    Some(profile_from_defects(degree, &defects))
}
