//! Verification reports: per-guarantee pass/fail with a witness that
//! reproduces the reported violation when re-evaluated.

use serde::{Deserialize, Serialize};

/// Which guarantee a report certifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Guarantee {
    SpectralAm,
    Pcp,
    Css,
    TraceBound,
    Monotonicity,
}

/// Worst case found while checking a guarantee.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Witness {
    /// Most-violating vector (eigenvector, projector column, or score delta
    /// location), when one exists.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<f64>>,
    /// Achieved ratio or margin; the quantity the tolerance was applied to.
    pub achieved: f64,
    /// Human-readable description of what `achieved` measures.
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub guarantee: Guarantee,
    pub passed: bool,
    pub witness: Witness,
    pub tolerance_used: f64,
}

impl VerificationReport {
    pub fn new(guarantee: Guarantee, passed: bool, witness: Witness, tolerance_used: f64) -> Self {
        VerificationReport { guarantee, passed, witness, tolerance_used }
    }
}
