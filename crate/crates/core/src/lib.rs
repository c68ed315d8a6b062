//! Minimal numbers of critical points of smooth maps between closed
//! orientable surfaces, with explicit permutation-monodromy certificates for
//! the branched covers that realize them.
//!
//! - [`surface`]: genus, Euler characteristic and Riemann–Hurwitz.
//! - [`phi`]: φ(Σ′, Σ) for every pair of surfaces.
//! - [`patterson`]: covering data solving the Hurwitz system.
//! - [`monodromy`]: certificates, their verifier and search, and an oracle.
//! - [`sphere`]: what is known about φ(S^m, S^n).
//! - [`volume`]: simplicial-volume ratio modulo ℤ.
//! - [`cli`]: the `hurwitz-phi` command line.

pub mod cli;
pub mod error;
pub mod monodromy;
pub mod patterson;
pub mod phi;
pub mod sphere;
pub mod surface;
pub mod volume;

pub use error::{Error, Result};
pub use monodromy::{
    oracle_phi, realize, verify_certificate, MonodromyCertificate, OracleOutcome, Permutation, Realization,
    SearchBudget, VerificationReport,
};
pub use patterson::{enumerate_covering_data, patterson_feasible};
pub use phi::{closed_form_phi, has_admissible_degree, minimal_k, phi, phi_table, InfiniteCase, PhiResult};
pub use sphere::{classify_sphere_pair, SpherePhi, SphereStatus};
pub use surface::{euler_char, genus_from_euler, hurwitz_euler, CoveringData, RamificationProfile, Surface};
pub use volume::{simplicial_volume, volume_ratio, RatioMod1};
