use std::fmt;

use serde::{Deserialize, Serialize};

use super::permutation::{orbit_of_zero, Permutation};
use crate::error::{Error, Result};
use crate::surface::{euler_char, RamificationProfile, Surface};

/// Fixed value of the `convention` field in certificate files.
pub const CONVENTION: &str = "left-to-right";

/// Monodromy of a degree-d branched cover of Σ_g with k branch values:
/// permutations a_i, b_i (one pair per handle) and s_j (one per branch
/// value) with [a_1,b_1]⋯[a_g,b_g]·s_1⋯s_k = id, acting transitively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonodromyCertificate {
    pub degree: usize,
    pub target_genus: u32,
    pub handles: Vec<(Permutation, Permutation)>,
    pub branch: Vec<Permutation>,
    pub declared_profile: RamificationProfile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    HandleCountMismatch {
        expected: u32,
        found: usize,
    },
    ProductNotIdentity,
    NotTransitive {
        orbit_size: usize,
    },
    /// Branch entry `index` is not of cycle type (m, 1, …, 1) with m >= 2.
    BranchNotSingleCycle {
        index: usize,
    },
    ProfileMismatch {
        declared: Vec<u32>,
        found: Vec<u32>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::HandleCountMismatch { expected, found } => {
                write!(f, "expected {expected} handle pairs, found {found}")
            }
            Violation::ProductNotIdentity => f.write_str("product relation does not give the identity"),
            Violation::NotTransitive { orbit_size } => {
                write!(f, "generated group is not transitive (orbit of 0 has size {orbit_size})")
            }
            Violation::BranchNotSingleCycle { index } => {
                write!(f, "branch entry {index} is not a single nontrivial cycle")
            }
            Violation::ProfileMismatch { declared, found } => {
                write!(f, "profile mismatch: declared {declared:?}, branch entries give {found:?}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub computed_source_euler: i64,
}

impl MonodromyCertificate {
    pub fn target(&self) -> Surface {
        Surface::new(self.target_genus)
    }

    pub(crate) fn generators(&self) -> impl Iterator<Item = &Permutation> {
        self.handles.iter().flat_map(|(a, b)| [a, b]).chain(self.branch.iter())
    }

    /// [a_1,b_1]⋯[a_g,b_g]·s_1⋯s_k.
    pub fn relation_product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for (a, b) in &self.handles {
            acc = acc.then(&Permutation::commutator(a, b));
        }
        for s in &self.branch {
            acc = acc.then(s);
        }
        acc
    }

    /// Conjugates every entry by `sigma`.
    pub fn conjugate_by(&self, sigma: &Permutation) -> MonodromyCertificate {
        MonodromyCertificate {
            degree: self.degree,
            target_genus: self.target_genus,
            handles: self.handles.iter().map(|(a, b)| (a.conjugate_by(sigma), b.conjugate_by(sigma))).collect(),
            branch: self.branch.iter().map(|s| s.conjugate_by(sigma)).collect(),
            declared_profile: self.declared_profile.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&CertificateFile::from(self)).expect("certificate serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CertificateFile = serde_json::from_str(text).map_err(|e| Error::CertificateFormat(e.to_string()))?;
        MonodromyCertificate::try_from(file)
    }
}

/// Checks the product relation, transitivity and the declared profile.
///
/// Every violated condition is listed. χ′ = d(2 − 2g) − Σ_j (d − c_j) is
/// computed from cycle counts whether or not the certificate is valid.
pub fn verify_certificate(cert: &MonodromyCertificate) -> Result<VerificationReport> {
    let d = cert.degree;
    if d == 0 {
        return Err(Error::MalformedPermutation("degree must be at least 1".into()));
    }
    if let Some(p) = cert.generators().find(|p| p.degree() != d) {
        return Err(Error::MalformedPermutation(format!(
            "permutation {p} acts on {} points, certificate degree is {d}",
            p.degree()
        )));
    }

    let mut violations = Vec::new();
    if cert.handles.len() != cert.target_genus as usize {
        violations.push(Violation::HandleCountMismatch { expected: cert.target_genus, found: cert.handles.len() });
    }
    if !cert.relation_product().is_identity() {
        violations.push(Violation::ProductNotIdentity);
    }
    let gens: Vec<&Permutation> = cert.generators().collect();
    let orbit_size = orbit_of_zero(d, &gens);
    if orbit_size != d {
        violations.push(Violation::NotTransitive { orbit_size });
    }

    let mut found = Vec::with_capacity(cert.branch.len());
    for (index, s) in cert.branch.iter().enumerate() {
        match s.single_cycle_length() {
            Some(m) => found.push(m as u32),
            None => violations.push(Violation::BranchNotSingleCycle { index }),
        }
    }
    found.sort_unstable_by(|a, b| b.cmp(a));
    if found != cert.declared_profile.multiplicities() {
        violations
            .push(Violation::ProfileMismatch { declared: cert.declared_profile.multiplicities().to_vec(), found });
    }

    let d64 = d as i64;
    let computed_source_euler =
        d64 * euler_char(cert.target_genus) - cert.branch.iter().map(|s| d64 - s.cycle_count() as i64).sum::<i64>();

    Ok(VerificationReport { valid: violations.is_empty(), violations, computed_source_euler })
}

/// On-disk layout; field order is the file format.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CertificateFile {
    degree: usize,
    target_genus: u32,
    handles: Vec<(Permutation, Permutation)>,
    branch: Vec<Permutation>,
    profile: Vec<u32>,
    convention: String,
}

impl From<&MonodromyCertificate> for CertificateFile {
    fn from(c: &MonodromyCertificate) -> Self {
        CertificateFile {
            degree: c.degree,
            target_genus: c.target_genus,
            handles: c.handles.clone(),
            branch: c.branch.clone(),
            profile: c.declared_profile.multiplicities().to_vec(),
            convention: CONVENTION.to_string(),
        }
    }
}

impl TryFrom<CertificateFile> for MonodromyCertificate {
    type Error = Error;

    fn try_from(f: CertificateFile) -> Result<Self> {
        if f.convention != CONVENTION {
            return Err(Error::CertificateFormat(format!(
                "unsupported composition convention {:?}, expected {CONVENTION:?}",
                f.convention
            )));
        }
        if f.profile.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::CertificateFormat("profile must be non-increasing".into()));
        }
        Ok(MonodromyCertificate {
            degree: f.degree,
            target_genus: f.target_genus,
            handles: f.handles,
            branch: f.branch,
            declared_profile: RamificationProfile::new(f.profile)?,
        })
    }
}
