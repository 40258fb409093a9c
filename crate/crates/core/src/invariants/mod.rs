//! Exact computation of the classical invariants ω, α, χ, θ with
//! independently checkable witnesses, plus vertex-criticality and the
//! singleton-maximizing cover parameter `q` that governs the prism
//! clique-cover identity θ(G □ K₂) = 2θ(G) − q.
//!
//! Every solver here is exact. The coloring-backed operations take a
//! node budget; exceeding it is a distinct reported outcome, never an
//! approximate answer.

mod clique;
mod coloring;
mod cover;

pub use clique::{independence_number, max_clique};
pub use coloring::{chromatic_number, is_vertex_critical, k_colorable, Coloring};
pub use cover::{clique_cover_number, max_singletons_q, min_cover_isolating, CliqueCover};

use crate::graph::Graph;
use thiserror::Error;

/// Node budget for the exponential coloring-family solvers. One unit is
/// charged per attempted color assignment, so outcomes are deterministic
/// and independent of wall-clock speed.
#[derive(Debug, Clone)]
pub struct Budget {
    limit: u64,
    spent: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Budget {
        Budget { limit, spent: 0 }
    }

    pub fn unlimited() -> Budget {
        Budget::new(u64::MAX)
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    #[inline]
    pub(crate) fn charge(&mut self, amount: u64) -> Result<(), BudgetExceeded> {
        self.spent = self.spent.saturating_add(amount);
        if self.spent > self.limit {
            Err(BudgetExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("node budget exceeded (limit {limit})")]
pub struct BudgetExceeded {
    pub limit: u64,
}

/// γ^∞ as recorded in a [`ParamsReport`]: either pinned exactly or
/// bracketed when the fixed-point solver ran out of budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaValue {
    Exact(usize),
    Bracketed { lower: usize, upper: usize },
}

/// The (α, ω, χ, θ) tuple for one graph, with witnesses, optionally
/// extended with a γ^∞ entry by the eternal-game solver.
#[derive(Debug, Clone)]
pub struct ParamsReport {
    pub n: usize,
    pub m: usize,
    pub alpha: usize,
    pub alpha_witness: Vec<usize>,
    pub omega: usize,
    pub omega_witness: Vec<usize>,
    pub chi: Option<usize>,
    pub coloring: Option<Coloring>,
    pub theta: Option<usize>,
    pub cover: Option<CliqueCover>,
    pub gamma: Option<GammaValue>,
}

impl ParamsReport {
    /// Computes α, ω, χ, θ for `g`. Budget exhaustion leaves the χ/θ
    /// entries empty rather than failing the whole report.
    pub fn compute(g: &Graph, budget: &mut Budget) -> ParamsReport {
        let (alpha, alpha_witness) = independence_number(g);
        let (omega, omega_witness) = max_clique(g);
        let (chi, coloring) = match chromatic_number(g, budget) {
            Ok((chi, col)) => (Some(chi), Some(col)),
            Err(_) => (None, None),
        };
        let (theta, cover) = match clique_cover_number(g, budget) {
            Ok((theta, cov)) => (Some(theta), Some(cov)),
            Err(_) => (None, None),
        };
        ParamsReport {
            n: g.n(),
            m: g.m(),
            alpha,
            alpha_witness,
            omega,
            omega_witness,
            chi,
            coloring,
            theta,
            cover,
            gamma: None,
        }
    }

    /// Cross-checks every witness and the bound chain. Returns the first
    /// violated condition, if any.
    pub fn consistency_error(&self, g: &Graph) -> Option<String> {
        if !is_independent(g, &self.alpha_witness) || self.alpha_witness.len() != self.alpha {
            return Some("alpha witness invalid".into());
        }
        if !is_clique(g, &self.omega_witness) || self.omega_witness.len() != self.omega {
            return Some("omega witness invalid".into());
        }
        if let (Some(chi), Some(col)) = (self.chi, &self.coloring) {
            if !col.is_proper(g) || col.color_count() != chi {
                return Some("coloring witness invalid".into());
            }
            if self.omega > chi {
                return Some("omega exceeds chi".into());
            }
        }
        if let (Some(theta), Some(cover)) = (self.theta, &self.cover) {
            if !cover.is_valid(g) || cover.blocks.len() != theta {
                return Some("cover witness invalid".into());
            }
            if self.alpha > theta {
                return Some("alpha exceeds theta".into());
            }
            if let Some(gamma) = &self.gamma {
                let (lo, hi) = match gamma {
                    GammaValue::Exact(v) => (*v, *v),
                    GammaValue::Bracketed { lower, upper } => (*lower, *upper),
                };
                if lo < self.alpha || hi > theta {
                    return Some("gamma outside alpha..theta".into());
                }
            }
        }
        None
    }
}

pub(crate) fn is_clique(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

pub(crate) fn is_independent(g: &Graph, verts: &[usize]) -> bool {
    verts
        .iter()
        .enumerate()
        .all(|(i, &u)| verts[i + 1..].iter().all(|&v| !g.has_edge(u, v)))
}
