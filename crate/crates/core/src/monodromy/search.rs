//! Searching for monodromy certificates with a prescribed degree and profile.
//!
//! Small degrees are searched exhaustively, with s_1 pinned to the canonical
//! cycle (0 1 … m_1−1); every certificate is conjugate to one of that form.
//! Larger instances use seeded random sampling, where the last branch entry
//! is solved from the product relation.

use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::certificate::MonodromyCertificate;
use super::permutation::{all_permutations, orbit_of_zero, Permutation};
use crate::surface::{hurwitz_euler, RamificationProfile, Surface};

pub const DEFAULT_BUDGET: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed;
/// Largest degree searched exhaustively.
pub const EXHAUSTIVE_MAX_DEGREE: u32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum number of candidate tuples evaluated.
    pub max_evaluations: u64,
    /// Seed for randomized mode.
    pub seed: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { max_evaluations: DEFAULT_BUDGET, seed: DEFAULT_SEED }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SearchStrategy {
    /// Exhaustive when the degree is small and the space fits the budget,
    /// randomized otherwise.
    #[default]
    Auto,
    Exhaustive,
    Randomized,
}

/// Impossibility established without finding a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InfeasibleReason {
    DegreeTooSmall {
        degree: u32,
        max_multiplicity: u32,
    },
    /// Σ(m_i − 1) is odd; each s_j has sign (−1)^(m_j − 1) and the
    /// relation forces an even total.
    OddTotalRamification,
    /// Riemann–Hurwitz gives χ′ > 2, so no connected source exists.
    SourceEulerAboveTwo {
        source_euler: i64,
    },
    /// At most two branch values over the sphere only give spheres.
    SphereTooFewBranchPoints {
        branch_points: usize,
        source_euler: i64,
    },
    /// The exhaustive search covered the whole (pinned) space.
    ExhaustedSearchSpace {
        evaluations: u64,
    },
}

impl fmt::Display for InfeasibleReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfeasibleReason::DegreeTooSmall { degree, max_multiplicity } => {
                write!(f, "degree {degree} is below the largest multiplicity {max_multiplicity}")
            }
            InfeasibleReason::OddTotalRamification => f.write_str("total ramification is odd"),
            InfeasibleReason::SourceEulerAboveTwo { source_euler } => {
                write!(f, "source Euler characteristic would be {source_euler} > 2")
            }
            InfeasibleReason::SphereTooFewBranchPoints { branch_points, source_euler } => write!(
                f,
                "{branch_points} branch point(s) over the sphere cannot give source Euler characteristic {source_euler}"
            ),
            InfeasibleReason::ExhaustedSearchSpace { evaluations } => {
                write!(f, "no certificate exists (exhaustive search of {evaluations} tuples)")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Realization {
    Certificate(MonodromyCertificate),
    Infeasible(InfeasibleReason),
    /// Budget exhausted; says nothing about existence.
    NotFound {
        evaluations: u64,
    },
}

impl Realization {
    pub fn certificate(&self) -> Option<&MonodromyCertificate> {
        match self {
            Realization::Certificate(c) => Some(c),
            _ => None,
        }
    }
}

pub fn realize(target: Surface, degree: u32, profile: &RamificationProfile, budget: SearchBudget) -> Realization {
    realize_with(target, degree, profile, budget, SearchStrategy::Auto)
}

pub fn realize_with(
    target: Surface,
    degree: u32,
    profile: &RamificationProfile,
    budget: SearchBudget,
    strategy: SearchStrategy,
) -> Realization {
    if let Some(reason) = arithmetic_obstruction(target, degree, profile) {
        return Realization::Infeasible(reason);
    }
    let problem = Problem::new(target, degree, profile);
    match strategy {
        SearchStrategy::Exhaustive => problem.exhaustive(budget.max_evaluations),
        SearchStrategy::Randomized => problem.construct().unwrap_or_else(|| problem.randomized(budget)),
        SearchStrategy::Auto => {
            let small = degree <= EXHAUSTIVE_MAX_DEGREE
                && problem.pinned_space_size().is_some_and(|n| n <= budget.max_evaluations);
            if small {
                problem.exhaustive(budget.max_evaluations)
            } else {
                problem.construct().unwrap_or_else(|| problem.randomized(budget))
            }
        }
    }
}

/// Necessary conditions that rule out a certificate before any search.
pub fn arithmetic_obstruction(target: Surface, degree: u32, profile: &RamificationProfile) -> Option<InfeasibleReason> {
    if let Some(max) = profile.max_multiplicity() {
        if max > degree {
            return Some(InfeasibleReason::DegreeTooSmall { degree, max_multiplicity: max });
        }
    }
    if profile.total_ramification() % 2 != 0 {
        return Some(InfeasibleReason::OddTotalRamification);
    }
    let source_euler = hurwitz_euler(target.euler(), degree, profile).ok()?;
    if source_euler > 2 {
        return Some(InfeasibleReason::SourceEulerAboveTwo { source_euler });
    }
    if target.is_sphere() && profile.len() <= 2 && source_euler <= 0 {
        return Some(InfeasibleReason::SphereTooFewBranchPoints { branch_points: profile.len(), source_euler });
    }
    None
}

struct Problem<'a> {
    target: Surface,
    degree: usize,
    genus: usize,
    profile: &'a RamificationProfile,
}

impl<'a> Problem<'a> {
    fn new(target: Surface, degree: u32, profile: &'a RamificationProfile) -> Self {
        Problem { target, degree: degree as usize, genus: target.genus() as usize, profile }
    }

    fn multiplicities(&self) -> Vec<usize> {
        self.profile.iter().map(|m| m as usize).collect()
    }

    fn certificate(&self, handles: Vec<(Permutation, Permutation)>, branch: Vec<Permutation>) -> MonodromyCertificate {
        MonodromyCertificate {
            degree: self.degree,
            target_genus: self.target.genus(),
            handles,
            branch,
            declared_profile: self.profile.clone(),
        }
    }

    /// Size of the exhaustive space: (d!)^(2g) · Π_{1<j<k} |C(m_j)|.
    fn pinned_space_size(&self) -> Option<u64> {
        let d = self.degree as u64;
        let factorial = (1..=d).try_fold(1u64, |acc, x| acc.checked_mul(x))?;
        let mut size = 1u64;
        for _ in 0..2 * self.genus {
            size = size.checked_mul(factorial)?;
        }
        let ms = self.multiplicities();
        if ms.len() > 2 {
            for &m in &ms[1..ms.len() - 1] {
                size = size.checked_mul(class_size(d, m as u64)?)?;
            }
        }
        Some(size)
    }

    /// Explicit certificates for shapes with a known closed construction.
    fn construct(&self) -> Option<Realization> {
        let d = self.degree;
        let ms = self.multiplicities();
        if ms.is_empty() && self.genus >= 1 {
            // cyclic unramified cover: a_1 = (0 1 … d−1), all else trivial
            let id = Permutation::identity(d);
            let mut handles = vec![(Permutation::canonical_cycle(d, d), id.clone())];
            handles.resize(self.genus, (id.clone(), id));
            return Some(Realization::Certificate(self.certificate(handles, vec![])));
        }
        if self.genus == 0 && d % 2 == 1 && d >= 3 && ms == [d, d, d] {
            // σ·σ·σ⁻² = id; σ⁻² is again a d-cycle because d is odd
            let sigma = Permutation::canonical_cycle(d, d);
            let branch = vec![sigma.clone(), sigma.clone(), sigma.pow(-2)];
            return Some(Realization::Certificate(self.certificate(vec![], branch)));
        }
        None
    }

    fn exhaustive(&self, max_evaluations: u64) -> Realization {
        let d = self.degree;
        let ms = self.multiplicities();
        let k = ms.len();
        let perms = all_permutations(d);
        let pinned = (k >= 1).then(|| Permutation::canonical_cycle(d, ms[0]));
        let middle_classes: Vec<Vec<Permutation>> = if k > 2 {
            ms[1..k - 1]
                .iter()
                .map(|&m| perms.iter().filter(|p| p.single_cycle_length() == Some(m)).cloned().collect())
                .collect()
        } else {
            Vec::new()
        };

        let mut radices: Vec<usize> = vec![perms.len(); 2 * self.genus];
        radices.extend(middle_classes.iter().map(Vec::len));

        let mut odometer = vec![0usize; radices.len()];
        let mut evaluations = 0u64;
        loop {
            if evaluations >= max_evaluations {
                return Realization::NotFound { evaluations };
            }
            evaluations += 1;

            let handles: Vec<(Permutation, Permutation)> =
                (0..self.genus).map(|i| (perms[odometer[2 * i]].clone(), perms[odometer[2 * i + 1]].clone())).collect();
            let mut branch: Vec<Permutation> = pinned.iter().cloned().collect();
            for (j, class) in middle_classes.iter().enumerate() {
                branch.push(class[odometer[2 * self.genus + j]].clone());
            }
            if let Some(cert) = self.close_relation(handles, branch, &ms) {
                return Realization::Certificate(cert);
            }

            // advance, last slot fastest so the first hit is lexicographically least
            let mut pos = radices.len();
            loop {
                if pos == 0 {
                    return Realization::Infeasible(InfeasibleReason::ExhaustedSearchSpace { evaluations });
                }
                pos -= 1;
                odometer[pos] += 1;
                if odometer[pos] < radices[pos] {
                    break;
                }
                odometer[pos] = 0;
            }
        }
    }

    fn randomized(&self, budget: SearchBudget) -> Realization {
        let d = self.degree;
        let ms = self.multiplicities();
        let k = ms.len();
        let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
        let mut points: Vec<usize> = (0..d).collect();

        let mut random_perm = |rng: &mut ChaCha8Rng| {
            points.shuffle(rng);
            Permutation::from_images_unchecked(points.clone())
        };
        for evaluations in 1..=budget.max_evaluations {
            let handles: Vec<(Permutation, Permutation)> =
                (0..self.genus).map(|_| (random_perm(&mut rng), random_perm(&mut rng))).collect();
            let branch: Vec<Permutation> =
                if k == 0 { Vec::new() } else { ms[..k - 1].iter().map(|&m| random_cycle(d, m, &mut rng)).collect() };
            let closed =
                if k == 0 { self.check_closed(handles, branch) } else { self.close_relation(handles, branch, &ms) };
            if let Some(cert) = closed {
                return Realization::Certificate(cert);
            }
            if evaluations == budget.max_evaluations {
                return Realization::NotFound { evaluations };
            }
        }
        Realization::NotFound { evaluations: 0 }
    }

    /// Given all handles and the first k − 1 branch entries (or all k when
    /// k = 1 and s_1 is pinned), solves for the last entry and checks it.
    fn close_relation(
        &self,
        handles: Vec<(Permutation, Permutation)>,
        mut branch: Vec<Permutation>,
        ms: &[usize],
    ) -> Option<MonodromyCertificate> {
        let k = ms.len();
        if branch.len() == k {
            return self.check_closed(handles, branch);
        }
        let mut prefix = Permutation::identity(self.degree);
        for (a, b) in &handles {
            prefix = prefix.then(&Permutation::commutator(a, b));
        }
        for s in &branch {
            prefix = prefix.then(s);
        }
        let last = prefix.inverse();
        if last.single_cycle_length() != Some(ms[k - 1]) {
            return None;
        }
        branch.push(last);
        self.transitive(&handles, &branch).then(|| self.certificate(handles, branch))
    }

    fn check_closed(
        &self,
        handles: Vec<(Permutation, Permutation)>,
        branch: Vec<Permutation>,
    ) -> Option<MonodromyCertificate> {
        let cert = self.certificate(handles, branch);
        (cert.relation_product().is_identity() && self.transitive(&cert.handles, &cert.branch)).then_some(cert)
    }

    fn transitive(&self, handles: &[(Permutation, Permutation)], branch: &[Permutation]) -> bool {
        let gens: Vec<&Permutation> = handles.iter().flat_map(|(a, b)| [a, b]).chain(branch.iter()).collect();
        orbit_of_zero(self.degree, &gens) == self.degree
    }
}

/// Number of permutations of cycle type (m, 1, …, 1) in S_d.
fn class_size(d: u64, m: u64) -> Option<u64> {
    // d!/((d − m)! · m)
    let falling = ((d - m + 1)..=d).try_fold(1u64, |acc, x| acc.checked_mul(x))?;
    Some(falling / m)
}

fn random_cycle(d: usize, m: usize, rng: &mut ChaCha8Rng) -> Permutation {
    let mut points: Vec<usize> = (0..d).collect();
    points.shuffle(rng);
    let mut images: Vec<usize> = (0..d).collect();
    for i in 0..m {
        images[points[i]] = points[(i + 1) % m];
    }
    Permutation::from_images_unchecked(images)
}
