use serde::{Deserialize, Serialize};

use super::certificate::MonodromyCertificate;
use super::search::{realize, Realization, SearchBudget};
use crate::patterson::{enumerate_covering_data, patterson_feasible};
use crate::surface::{CoveringData, Surface};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum OracleOutcome {
    /// A cover with `k` critical points exists; `k` is an upper bound for φ,
    /// and equals it when no smaller `k` was found within the bounds.
    Finite {
        k: u32,
        witness: CoveringData,
        #[serde(skip)]
        certificate: Option<MonodromyCertificate>,
    },
    NoneFoundWithin {
        max_k: u32,
        max_degree: u32,
    },
}

impl OracleOutcome {
    pub fn value(&self) -> Option<u32> {
        match self {
            OracleOutcome::Finite { k, .. } => Some(*k),
            OracleOutcome::NoneFoundWithin { .. } => None,
        }
    }
}

/// Scans k = 0, 1, …, `k_max` and returns the first k for which some
/// covering datum of degree <= `d_max` is realizable: by Patterson's
/// criterion over targets of genus >= 1, by an explicit certificate over
/// the sphere.
pub fn oracle_phi(source: Surface, target: Surface, k_max: u32, d_max: u32, budget: SearchBudget) -> OracleOutcome {
    let chi_src = source.euler();
    for k in 0..=k_max {
        let data = enumerate_covering_data(chi_src, target, k, d_max).expect("source is a surface").data;
        for datum in data {
            if !target.is_sphere() {
                if patterson_feasible(target, datum.degree(), datum.profile()).expect("target genus >= 1") {
                    return OracleOutcome::Finite { k, witness: datum, certificate: None };
                }
                continue;
            }
            if let Realization::Certificate(cert) = realize(target, datum.degree(), datum.profile(), budget) {
                return OracleOutcome::Finite { k, witness: datum, certificate: Some(cert) };
            }
        }
    }
    OracleOutcome::NoneFoundWithin { max_k: k_max, max_degree: d_max }
}
