//! Exact eternal domination.
//!
//! Game model: guards occupy distinct vertices (a configuration is a
//! k-subset); the attacker picks an unoccupied vertex; exactly one guard
//! moves along a single edge onto the attacked vertex. A graph is
//! eternally k-guardable iff the greatest family of configurations
//! closed under defending every attack is nonempty; that family is
//! computed by synchronous deletion sweeps over a rank-indexed bitmap,
//! which makes results deterministic and safely data-parallel.

mod certificate;
mod combin;
mod family;
mod gamma;

pub use certificate::{
    edge_hash, verify_certificate, CertParseError, EternalCertificate, Verdict, VerifyOutcome,
};
pub use family::{
    dominating_configs, safe_family, DominatingConfigs, FixedPointRun, GuardConfig, Limits,
    SafeFamily,
};
pub use gamma::{gamma_infinity, is_eternally_k_guardable, GammaOutcome, GuardabilityCheck};

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum EternalError {
    #[error("guard count {k} out of range 1..={n}")]
    BadGuardCount { k: usize, n: usize },
    #[error("rank space C({n},{k}) = {ranks} exceeds the rank cap {cap}")]
    RankCapExceeded {
        n: usize,
        k: usize,
        ranks: u64,
        cap: u64,
    },
    #[error("fixed point did not stabilize within {cap} sweeps")]
    SweepCapExceeded { cap: u64 },
    #[error(
        "internal error: no safe family found for any k up to C(alpha+1,2) = {cap} (alpha = {alpha})"
    )]
    BoundViolation { alpha: usize, cap: u64 },
}
