//! The eternal domination number: ascend k from the sound lower bound
//! α(G) until the safe family is nonempty. The first guardable k is
//! γ^∞(G). A C(α+1, 2) ceiling guards against solver bugs; exceeding it
//! would contradict the known upper bound, so it is an internal error,
//! never an answer.

use super::certificate::EternalCertificate;
use super::family::{safe_family, FixedPointRun, Limits};
use super::EternalError;
use crate::graph::Graph;
use crate::invariants::{clique_cover_number, independence_number, Budget};

/// A solved guardability question: the certificate plus the fixed-point
/// attestation behind it.
#[derive(Debug)]
pub struct GuardabilityCheck {
    pub certificate: EternalCertificate,
    pub run: FixedPointRun,
}

/// Decides eternal k-guardability and returns the certificate (embedding
/// the family when guardable, the empty-family attestation otherwise).
pub fn is_eternally_k_guardable(
    g: &Graph,
    k: usize,
    limits: &Limits,
) -> Result<GuardabilityCheck, EternalError> {
    let run = safe_family(g, k, limits)?;
    let certificate = EternalCertificate::from_run(g, k, &run);
    Ok(GuardabilityCheck { certificate, run })
}

#[derive(Debug)]
pub enum GammaOutcome {
    Exact {
        gamma: usize,
        check: GuardabilityCheck,
    },
    /// The solver ran into its rank or sweep cap before deciding; γ^∞
    /// lies in `lower..=upper` (upper from θ, or the C(α+1,2) bound when
    /// θ itself exceeded its budget).
    Bracketed { lower: usize, upper: usize },
}

impl GammaOutcome {
    pub fn exact_value(&self) -> Option<usize> {
        match self {
            GammaOutcome::Exact { gamma, .. } => Some(*gamma),
            GammaOutcome::Bracketed { .. } => None,
        }
    }
}

fn pairs_bound(alpha: usize) -> u64 {
    (alpha as u64 + 1) * alpha as u64 / 2
}

/// Computes γ^∞(G) exactly, or brackets it when the budget runs out.
pub fn gamma_infinity(
    g: &Graph,
    limits: &Limits,
    coloring_budget: &mut Budget,
) -> Result<GammaOutcome, EternalError> {
    let n = g.n();
    if n == 0 {
        return Err(EternalError::BadGuardCount { k: 0, n: 0 });
    }
    let (alpha, _) = independence_number(g);
    let cap = pairs_bound(alpha);
    let mut k = alpha;
    loop {
        match safe_family(g, k, limits) {
            Ok(run) if !run.family.is_empty() => {
                let certificate = EternalCertificate::from_run(g, k, &run);
                return Ok(GammaOutcome::Exact {
                    gamma: k,
                    check: GuardabilityCheck { certificate, run },
                });
            }
            Ok(_) => {
                if (k as u64 + 1) > cap || k + 1 > n {
                    // γ^∞ ≤ min(θ, C(α+1,2), n) always holds, so running
                    // past either cap means the solver itself is broken
                    return Err(EternalError::BoundViolation { alpha, cap });
                }
                k += 1;
            }
            Err(
                EternalError::RankCapExceeded { .. } | EternalError::SweepCapExceeded { .. },
            ) => {
                let mut upper = cap.min(n as u64) as usize;
                if let Ok((theta, _)) = clique_cover_number(g, coloring_budget) {
                    upper = upper.min(theta);
                }
                return Ok(GammaOutcome::Bracketed { lower: k, upper });
            }
            Err(other) => return Err(other),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, complete_graph, empty_graph, join, mycielskian, Graph};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn exact(g: &Graph) -> usize {
        gamma_infinity(g, &Limits::default(), &mut Budget::unlimited())
            .unwrap()
            .exact_value()
            .unwrap()
    }

    #[test]
    fn gamma_small_families() {
        for n in 1..=6 {
            assert_eq!(exact(&complete_graph(n).unwrap()), 1, "K_{n}");
            assert_eq!(exact(&empty_graph(n).unwrap()), n, "empty {n}");
        }
    }

    #[test]
    fn gamma_cycles_and_paths() {
        assert_eq!(exact(&cycle(5)), 3);
        assert_eq!(exact(&cycle(6)), 3);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(exact(&p3), 2);
    }

    #[test]
    fn gamma_h_star_join() {
        // H ∨ empty(3) with H = complement(Grötzsch): α = γ^∞ = 3
        let (grotzsch, _) = mycielskian(&cycle(5));
        let h = complement(&grotzsch);
        let h_star = join(&h, &empty_graph(3).unwrap());
        assert_eq!(exact(&h_star), 3);
    }

    #[test]
    fn bracketed_when_rank_capped() {
        let c5 = cycle(5);
        let tiny = Limits { rank_cap: 1, sweep_cap: 1 << 20 };
        match gamma_infinity(&c5, &tiny, &mut Budget::unlimited()).unwrap() {
            GammaOutcome::Bracketed { lower, upper } => {
                assert_eq!(lower, 2); // α(C_5)
                assert_eq!(upper, 3); // θ(C_5)
            }
            other => panic!("expected bracket, got {other:?}"),
        }
    }
}
