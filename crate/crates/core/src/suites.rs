//! Seeded property suites: each one checks a structural identity or
//! inequality on a stream of random graphs (plus an exhaustive
//! small-order sweep for the bound chain) via independent computations
//! on both sides.

use crate::eternal::{gamma_infinity, GammaOutcome, Limits};
use crate::graph::{mycielskian, prism, serialize_edge_list, Graph};
use crate::invariants::{
    chromatic_number, clique_cover_number, independence_number, is_vertex_critical, max_clique,
    max_singletons_q, Budget, BudgetExceeded,
};
use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    /// χ(M(G)) = χ(G) + 1 on every sample.
    MycielskiChi,
    /// ω(M(G)) = ω(G) on connected samples with n ≥ 2.
    MycielskiOmega,
    /// M(G) vertex-critical whenever G is (samples have n ≥ 2).
    MycielskiCritical,
    /// θ(G □ K₂) = 2θ(G) − q, both sides computed independently.
    PrismTheta,
    /// α ≤ γ^∞ ≤ θ and γ^∞ ≤ C(α+1, 2); includes every labeled graph
    /// on 4 vertices before the random samples.
    BoundChain,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 5] = [
        SuiteKind::MycielskiChi,
        SuiteKind::MycielskiOmega,
        SuiteKind::MycielskiCritical,
        SuiteKind::PrismTheta,
        SuiteKind::BoundChain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::MycielskiChi => "mycielski-chi",
            SuiteKind::MycielskiOmega => "mycielski-omega",
            SuiteKind::MycielskiCritical => "mycielski-critical",
            SuiteKind::PrismTheta => "prism-theta",
            SuiteKind::BoundChain => "bound-chain",
        }
    }

    pub fn from_name(name: &str) -> Option<SuiteKind> {
        SuiteKind::ALL.iter().copied().find(|k| k.name() == name)
    }

    /// Sampled vertex-count range. The Mycielskian suites start at 2:
    /// the criticality transfer genuinely needs a vertex beyond K_1
    /// (M(K_1) = K_2 ⊎ K_1 is not vertex-critical), and the clique
    /// identity is stated for n ≥ 2.
    fn n_range(&self) -> (usize, usize) {
        match self {
            SuiteKind::MycielskiChi | SuiteKind::MycielskiOmega | SuiteKind::MycielskiCritical => {
                (2, 8)
            }
            SuiteKind::PrismTheta | SuiteKind::BoundChain => (1, 9),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    pub samples: usize,
    pub node_budget: u64,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 0,
            samples: 100,
            node_budget: 200_000_000,
            limits: Limits::default(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SuiteFailure {
    pub case: String,
    pub detail: String,
    pub graph_text: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub seed: u64,
    pub samples: usize,
    /// Samples on which the suite's predicate actually applied (for the
    /// conditional suites).
    pub checked: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("suite-report v1\n");
        let _ = writeln!(out, "version {}", crate::VERSION);
        let _ = writeln!(out, "suite {}", self.name);
        let _ = writeln!(out, "seed {}", self.seed);
        let _ = writeln!(out, "samples {}", self.samples);
        let _ = writeln!(out, "checked {}", self.checked);
        let _ = writeln!(out, "failures {}", self.failures.len());
        for f in &self.failures {
            let _ = writeln!(out, "failure {} {}", f.case, f.detail);
            out.push_str(&f.graph_text);
        }
        let _ = writeln!(
            out,
            "result {}",
            if self.passed() { "pass" } else { "fail" }
        );
        out
    }
}

struct SuiteRun<'a> {
    cfg: &'a SuiteConfig,
    checked: usize,
    failures: Vec<SuiteFailure>,
}

impl SuiteRun<'_> {
    fn fail(&mut self, case: String, detail: String, g: &Graph) {
        self.failures.push(SuiteFailure {
            case,
            detail,
            graph_text: serialize_edge_list(g),
        });
    }

    fn check(&mut self, kind: SuiteKind, case: String, g: &Graph) -> Result<(), BudgetExceeded> {
        let mut budget = Budget::new(self.cfg.node_budget);
        match kind {
            SuiteKind::MycielskiChi => {
                let (chi, _) = chromatic_number(g, &mut budget)?;
                let (m, _) = mycielskian(g);
                let (chi_m, _) = chromatic_number(&m, &mut budget)?;
                self.checked += 1;
                if chi_m != chi + 1 {
                    self.fail(case, format!("chi {chi} but chi(M) {chi_m}"), g);
                }
            }
            SuiteKind::MycielskiOmega => {
                if g.n() < 2 || !g.is_connected() {
                    return Ok(());
                }
                let (omega, _) = max_clique(g);
                let (m, _) = mycielskian(g);
                let (omega_m, _) = max_clique(&m);
                self.checked += 1;
                if omega_m != omega {
                    self.fail(case, format!("omega {omega} but omega(M) {omega_m}"), g);
                }
            }
            SuiteKind::MycielskiCritical => {
                let (critical, _) = is_vertex_critical(g, &mut budget)?;
                if !critical {
                    return Ok(());
                }
                let (m, _) = mycielskian(g);
                let (critical_m, bad) = is_vertex_critical(&m, &mut budget)?;
                self.checked += 1;
                if !critical_m {
                    self.fail(case, format!("M(G) not critical at vertex {bad:?}"), g);
                }
            }
            SuiteKind::PrismTheta => {
                let (theta, _) = clique_cover_number(g, &mut budget)?;
                let (q, _) = max_singletons_q(g, &mut budget)?;
                let p = prism(g);
                let (theta_p, _) = clique_cover_number(&p, &mut budget)?;
                self.checked += 1;
                if theta_p != 2 * theta - q {
                    self.fail(
                        case,
                        format!("theta(prism) {theta_p} but 2*{theta}-{q} = {}", 2 * theta - q),
                        g,
                    );
                }
            }
            SuiteKind::BoundChain => {
                let (alpha, _) = independence_number(g);
                let (theta, _) = clique_cover_number(g, &mut budget)?;
                let gamma = match gamma_infinity(g, &self.cfg.limits, &mut budget) {
                    Ok(GammaOutcome::Exact { gamma, .. }) => gamma,
                    Ok(GammaOutcome::Bracketed { .. }) => return Err(BudgetExceeded {
                        limit: self.cfg.node_budget,
                    }),
                    Err(_) => {
                        self.fail(case, "gamma solver error".into(), g);
                        return Ok(());
                    }
                };
                self.checked += 1;
                let pairs_bound = (alpha + 1) * alpha / 2;
                if !(alpha <= gamma && gamma <= theta) {
                    self.fail(
                        case,
                        format!("chain violated: alpha {alpha} gamma {gamma} theta {theta}"),
                        g,
                    );
                } else if gamma > pairs_bound {
                    self.fail(
                        case,
                        format!("gamma {gamma} exceeds C(alpha+1,2) = {pairs_bound}"),
                        g,
                    );
                }
            }
        }
        Ok(())
    }
}

/// Runs a suite: the exhaustive 4-vertex sweep for the bound chain, then
/// `samples` seeded Erdős–Rényi graphs. Budget exhaustion inside a check
/// aborts the suite as a whole (distinct from a check failure).
pub fn run_suite(kind: SuiteKind, cfg: &SuiteConfig) -> Result<SuiteReport, BudgetExceeded> {
    let mut run = SuiteRun {
        cfg,
        checked: 0,
        failures: Vec::new(),
    };
    if kind == SuiteKind::BoundChain {
        let pairs: Vec<(usize, usize)> = (0..4)
            .flat_map(|u| ((u + 1)..4).map(move |v| (u, v)))
            .collect();
        for code in 0u32..1 << 6 {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| code >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::from_edges(4, edges).expect("simple edges");
            run.check(kind, format!("n4-code-{code}"), &g)?;
        }
    }
    let (lo, hi) = kind.n_range();
    let mut sampler = crate::random::GraphSampler::new(cfg.seed, lo, hi);
    for i in 0..cfg.samples {
        let g = sampler.sample();
        run.check(kind, format!("sample-{i}"), &g)?;
    }
    Ok(SuiteReport {
        name: kind.name(),
        seed: cfg.seed,
        samples: cfg.samples,
        checked: run.checked,
        failures: run.failures,
    })
}
