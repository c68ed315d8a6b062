//! Permutation monodromy: certificates of branched covers, their verifier,
//! the certificate search, and a brute-force φ oracle built on top.

mod certificate;
mod oracle;
mod permutation;
mod search;

pub use certificate::{verify_certificate, MonodromyCertificate, VerificationReport, Violation, CONVENTION};
pub use oracle::{oracle_phi, OracleOutcome};
pub use permutation::{all_permutations, orbit_of_zero, Permutation};
pub use search::{
    arithmetic_obstruction, realize, realize_with, InfeasibleReason, Realization, SearchBudget, SearchStrategy,
    DEFAULT_BUDGET, DEFAULT_SEED, EXHAUSTIVE_MAX_DEGREE,
};
