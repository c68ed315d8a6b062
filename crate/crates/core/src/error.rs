use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Euler characteristic {0} is odd; no closed orientable surface has it")]
    OddEuler(i64),

    #[error("Euler characteristic {0} exceeds 2; not a closed orientable surface")]
    NotASurface(i64),

    #[error("ramification multiplicity {0} is below 2")]
    InvalidMultiplicity(u32),

    #[error("degree {degree} is below the largest multiplicity {max_multiplicity}")]
    DegreeTooSmall { degree: u32, max_multiplicity: u32 },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("covering data is inconsistent: {0}")]
    InconsistentCovering(String),

    #[error("target Euler characteristic {0} is not hyperbolic (must be <= -2)")]
    TargetNotHyperbolic(i64),

    #[error("closed form needs |chi_src| >= 2|chi_tgt| with chi_tgt <= -2 (got chi_src={chi_src}, chi_tgt={chi_tgt})")]
    OutOfDomain { chi_src: i64, chi_tgt: i64 },

    #[error("existence criterion needs a target of genus >= 1")]
    SphereTargetNotCovered,

    #[error("malformed permutation: {0}")]
    MalformedPermutation(String),

    #[error("sphere pair (m={m}, n={n}) out of range: need m >= n >= 2")]
    OutOfRange { m: u32, n: u32 },

    #[error("target genus {0} has zero simplicial volume")]
    ZeroTargetVolume(u32),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("certificate file: {0}")]
    CertificateFormat(String),
}
