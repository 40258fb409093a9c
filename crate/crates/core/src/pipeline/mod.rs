//! The counterexample pipeline: build the Mycielskian tower M_k^l and
//! the chain M → H → H* → G, then verify every claimed parameter value
//! exactly, including the prism clique-cover identity and the final
//! conjecture-refutation verdict.

mod verify;

pub use verify::{
    verify_counterexample, verify_join_lemma, verify_prism_theta, JoinLemmaReport,
    JoinLemmaStatus, PrismThetaCheck, VerifyReport, Verdict,
};

use crate::eternal::Limits;
use crate::graph::{add_pendant, complement, complete_graph, empty_graph, join, mycielskian, Graph};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("tower parameters require 2 <= k <= l, got k={k}, l={l}")]
    BadTowerParams { k: usize, l: usize },
    #[error("w = {w} is not a vertex of H (order {order})")]
    BadW { w: usize, order: usize },
}

/// Budgets threaded through one verification run: a single cumulative
/// node budget for all coloring-family solving, plus the fixed-point
/// caps.
#[derive(Debug, Clone, Copy)]
pub struct PipelineBudgets {
    pub node_budget: u64,
    pub limits: Limits,
    /// Embedded in reports for reproducibility (the pipeline itself is
    /// deterministic and uses no randomness).
    pub seed: u64,
}

impl Default for PipelineBudgets {
    fn default() -> PipelineBudgets {
        PipelineBudgets {
            node_budget: 200_000_000,
            limits: Limits::default(),
            seed: 0,
        }
    }
}

/// The iterated Mycielskian M_k^l: starts at K_k, applies M() l−k times.
/// Has chromatic number l and clique number k.
pub fn build_tower(k: usize, l: usize) -> Result<Graph, PipelineError> {
    if k < 2 || l < k {
        return Err(PipelineError::BadTowerParams { k, l });
    }
    let mut g = complete_graph(k).expect("k >= 2");
    for _ in k..l {
        g = mycielskian(&g).0;
    }
    Ok(g)
}

/// What a claim asserts about a computed quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expected {
    Value(u64),
    AtMost(u64),
}

impl std::fmt::Display for Expected {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Expected::Value(v) => write!(f, "{v}"),
            Expected::AtMost(v) => write!(f, "<={v}"),
        }
    }
}

/// One asserted parameter value of the counterexample chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub name: &'static str,
    pub expected: Expected,
}

/// What the solvers actually produced for a claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Computed {
    Value(u64),
    AtMost(u64),
    Interval(u64, u64),
    BudgetExceeded,
}

impl std::fmt::Display for Computed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Computed::Value(v) => write!(f, "{v}"),
            Computed::AtMost(v) => write!(f, "<={v}"),
            Computed::Interval(lo, hi) => write!(f, "{lo}..{hi}"),
            Computed::BudgetExceeded => write!(f, "budget-exceeded"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimStatus {
    Ok,
    Fail,
    Inconclusive,
}

impl ClaimStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClaimStatus::Ok => "ok",
            ClaimStatus::Fail => "fail",
            ClaimStatus::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimOutcome {
    pub claim: Claim,
    pub computed: Computed,
    pub status: ClaimStatus,
}

impl ClaimOutcome {
    pub(crate) fn judge(claim: Claim, computed: Computed) -> ClaimOutcome {
        let status = match (claim.expected, computed) {
            (_, Computed::BudgetExceeded) => ClaimStatus::Inconclusive,
            (Expected::Value(e), Computed::Value(c)) => ok_or_fail(e == c),
            (Expected::Value(e), Computed::AtMost(c)) => {
                // an upper bound alone cannot confirm an equality
                if c < e {
                    ClaimStatus::Fail
                } else {
                    ClaimStatus::Inconclusive
                }
            }
            (Expected::Value(e), Computed::Interval(lo, hi)) => {
                if lo == hi {
                    ok_or_fail(lo == e)
                } else if e < lo || e > hi {
                    ClaimStatus::Fail
                } else {
                    ClaimStatus::Inconclusive
                }
            }
            (Expected::AtMost(e), Computed::Value(c)) => ok_or_fail(c <= e),
            (Expected::AtMost(e), Computed::AtMost(c)) => ok_or_fail(c <= e),
            (Expected::AtMost(e), Computed::Interval(lo, hi)) => {
                if hi <= e {
                    ClaimStatus::Ok
                } else if lo > e {
                    ClaimStatus::Fail
                } else {
                    ClaimStatus::Inconclusive
                }
            }
        };
        ClaimOutcome {
            claim,
            computed,
            status,
        }
    }
}

fn ok_or_fail(ok: bool) -> ClaimStatus {
    if ok {
        ClaimStatus::Ok
    } else {
        ClaimStatus::Fail
    }
}

/// The constructed chain M → H → H* → G for one k, with the paper's
/// asserted parameter values as claims to verify.
#[derive(Debug, Clone)]
pub struct CounterexampleBundle {
    pub k: usize,
    /// t = C(k+1, 2) + 1, the common value of α, γ^∞, θ on G.
    pub target: usize,
    pub tower: Graph,
    pub h: Graph,
    pub h_star: Graph,
    pub g: Graph,
    pub w: usize,
    pub x_pendant: usize,
    pub claims: Vec<Claim>,
}

/// Builds the chain: M = M_k^t, H = complement(M), H* = H ∨ empty(t−1),
/// G = H* plus a pendant at `w` (a vertex of H).
pub fn build_counterexample(k: usize, w: usize) -> Result<CounterexampleBundle, PipelineError> {
    let target = k * (k + 1) / 2 + 1;
    let tower = build_tower(k, target)?;
    let h = complement(&tower);
    if w >= h.n() {
        return Err(PipelineError::BadW { w, order: h.n() });
    }
    let h_star = join(&h, &empty_graph(target - 1).expect("t >= 2"));
    let g = add_pendant(&h_star, w).expect("w < |V(H*)|");
    let x_pendant = g.n() - 1;

    let t = target as u64;
    let claims = vec![
        Claim { name: "alpha-H", expected: Expected::Value(k as u64) },
        Claim { name: "theta-H", expected: Expected::Value(t) },
        Claim { name: "alpha-Hstar", expected: Expected::Value(t - 1) },
        Claim { name: "gamma-Hstar", expected: Expected::Value(t - 1) },
        Claim { name: "theta-Hstar", expected: Expected::Value(t) },
        Claim { name: "alpha-G", expected: Expected::Value(t) },
        Claim { name: "gamma-G", expected: Expected::Value(t) },
        Claim { name: "theta-G", expected: Expected::Value(t) },
        Claim { name: "q-G", expected: Expected::Value(0) },
        Claim { name: "theta-prism", expected: Expected::Value(2 * t) },
        Claim { name: "gamma-prism-upper", expected: Expected::AtMost(2 * t - 1) },
    ];
    Ok(CounterexampleBundle {
        k,
        target,
        tower,
        h,
        h_star,
        g,
        w,
        x_pendant,
        claims,
    })
}
