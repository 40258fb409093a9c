//! Exact verification of the counterexample chain, the prism
//! clique-cover identity, and the join equalities.

use super::{
    Claim, ClaimOutcome, ClaimStatus, Computed, CounterexampleBundle, PipelineBudgets,
};
use crate::eternal::{
    gamma_infinity, is_eternally_k_guardable, EternalCertificate, EternalError, GammaOutcome,
};
use crate::graph::{empty_graph, join, prism, Graph};
use crate::invariants::{
    clique_cover_number, independence_number, max_singletons_q, Budget, BudgetExceeded,
    CliqueCover,
};

/// Overall outcome of one verification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// γ^∞(G) = θ(G) verified and γ^∞(G□K₂) < θ(G□K₂) verified.
    ConjectureRefuted,
    /// A required claim could not be decided within budget.
    Inconclusive,
    /// A required claim was refuted outright.
    Failed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::ConjectureRefuted => "conjecture refuted",
            Verdict::Inconclusive => "inconclusive",
            Verdict::Failed => "failed",
        }
    }
}

/// A named artifact produced by the run (certificates, cover witnesses),
/// written beside the report by the CLI.
#[derive(Debug, Clone)]
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub k: usize,
    pub target: usize,
    pub w: usize,
    pub seed: u64,
    pub node_budget: u64,
    pub rank_cap: u64,
    pub sweep_cap: u64,
    pub graphs: Vec<(&'static str, usize, usize)>,
    pub outcomes: Vec<ClaimOutcome>,
    /// Computed quantities the paper does not pin to a number:
    /// α(G□K₂) and the exact γ^∞(G□K₂).
    pub values: Vec<(&'static str, Computed)>,
    pub notes: Vec<String>,
    pub verdict: Verdict,
    pub artifacts: Vec<Artifact>,
}

impl VerifyReport {
    pub fn outcome(&self, name: &str) -> Option<&ClaimOutcome> {
        self.outcomes.iter().find(|o| o.claim.name == name)
    }

    pub fn value(&self, name: &str) -> Option<Computed> {
        self.values.iter().find(|(n, _)| *n == name).map(|(_, c)| *c)
    }

    pub fn any_claim_failed(&self) -> bool {
        self.outcomes.iter().any(|o| o.status == ClaimStatus::Fail)
    }

    pub fn any_claim_inconclusive(&self) -> bool {
        self.outcomes
            .iter()
            .any(|o| o.status == ClaimStatus::Inconclusive)
    }

    /// Canonical plain-text rendering: stable field order, no
    /// timestamps, no thread counts, byte-identical across runs.
    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str("refute-report v1\n");
        out.push_str(&format!("version {}\n", crate::VERSION));
        out.push_str(&format!("k {}\n", self.k));
        out.push_str(&format!("t {}\n", self.target));
        out.push_str(&format!("w {}\n", self.w));
        out.push_str(&format!("seed {}\n", self.seed));
        out.push_str(&format!("budget-nodes {}\n", self.node_budget));
        out.push_str(&format!("rank-cap {}\n", self.rank_cap));
        out.push_str(&format!("sweep-cap {}\n", self.sweep_cap));
        for (label, n, m) in &self.graphs {
            out.push_str(&format!("graph {label} n {n} m {m}\n"));
        }
        for o in &self.outcomes {
            out.push_str(&format!(
                "claim {} expected {} computed {} status {}\n",
                o.claim.name,
                o.claim.expected,
                o.computed,
                o.status.as_str()
            ));
        }
        for (name, computed) in &self.values {
            out.push_str(&format!("value {name} {computed}\n"));
        }
        for note in &self.notes {
            out.push_str(&format!("note {note}\n"));
        }
        out.push_str(&format!("verdict {}\n", self.verdict.as_str()));
        out
    }
}

fn value_claim(claims: &[Claim], name: &str, computed: Computed) -> ClaimOutcome {
    let claim = claims
        .iter()
        .find(|c| c.name == name)
        .expect("claim name is in the bundle")
        .clone();
    ClaimOutcome::judge(claim, computed)
}

fn alpha_of(g: &Graph) -> Computed {
    Computed::Value(independence_number(g).0 as u64)
}

fn theta_of(g: &Graph, budget: &mut Budget) -> (Computed, Option<CliqueCover>) {
    match clique_cover_number(g, budget) {
        Ok((theta, cover)) => (Computed::Value(theta as u64), Some(cover)),
        Err(BudgetExceeded { .. }) => (Computed::BudgetExceeded, None),
    }
}

fn gamma_of(
    g: &Graph,
    budgets: &PipelineBudgets,
    budget: &mut Budget,
) -> (Computed, Option<EternalCertificate>) {
    match gamma_infinity(g, &budgets.limits, budget) {
        Ok(GammaOutcome::Exact { gamma, check }) => {
            (Computed::Value(gamma as u64), Some(check.certificate))
        }
        Ok(GammaOutcome::Bracketed { lower, upper }) => {
            (Computed::Interval(lower as u64, upper as u64), None)
        }
        Err(_) => (Computed::BudgetExceeded, None),
    }
}

/// Runs every claim of the bundle through the exact solvers, plus the
/// prism quantities the theorem relates (α and exact γ^∞ of G□K₂), and
/// derives the final verdict.
pub fn verify_counterexample(
    bundle: &CounterexampleBundle,
    budgets: &PipelineBudgets,
) -> VerifyReport {
    let mut budget = Budget::new(budgets.node_budget);
    let t = bundle.target as u64;
    let g_prism = prism(&bundle.g);
    let mut outcomes = Vec::new();
    let mut values = Vec::new();
    let mut notes = Vec::new();
    let mut artifacts = Vec::new();

    // H and H*
    outcomes.push(value_claim(&bundle.claims, "alpha-H", alpha_of(&bundle.h)));
    let (theta_h, _) = theta_of(&bundle.h, &mut budget);
    outcomes.push(value_claim(&bundle.claims, "theta-H", theta_h));
    outcomes.push(value_claim(&bundle.claims, "alpha-Hstar", alpha_of(&bundle.h_star)));
    let (gamma_hstar, cert) = gamma_of(&bundle.h_star, budgets, &mut budget);
    outcomes.push(value_claim(&bundle.claims, "gamma-Hstar", gamma_hstar));
    if let Some(cert) = cert {
        artifacts.push(Artifact { name: "gamma-Hstar.cert".into(), contents: cert.to_text() });
    }
    let (theta_hstar, _) = theta_of(&bundle.h_star, &mut budget);
    outcomes.push(value_claim(&bundle.claims, "theta-Hstar", theta_hstar));

    // G
    outcomes.push(value_claim(&bundle.claims, "alpha-G", alpha_of(&bundle.g)));
    let (gamma_g, cert) = gamma_of(&bundle.g, budgets, &mut budget);
    outcomes.push(value_claim(&bundle.claims, "gamma-G", gamma_g));
    if let Some(cert) = cert {
        artifacts.push(Artifact { name: "gamma-G.cert".into(), contents: cert.to_text() });
    }
    let (theta_g, _) = theta_of(&bundle.g, &mut budget);
    outcomes.push(value_claim(&bundle.claims, "theta-G", theta_g));

    // q(G), exhaustively, and θ(G□K₂) = 2θ(G) − q via the cover identity
    let q_computed = match max_singletons_q(&bundle.g, &mut budget) {
        Ok((q, cover)) => {
            artifacts.push(Artifact { name: "theta-G.cover".into(), contents: cover.to_text() });
            let prism_cover = doubled_prism_cover(&cover, bundle.g.n());
            debug_assert!(prism_cover.is_valid(&g_prism));
            artifacts.push(Artifact {
                name: "theta-prism-lemma.cover".into(),
                contents: prism_cover.to_text(),
            });
            Some(q as u64)
        }
        Err(BudgetExceeded { .. }) => None,
    };
    outcomes.push(value_claim(
        &bundle.claims,
        "q-G",
        q_computed.map_or(Computed::BudgetExceeded, Computed::Value),
    ));
    let theta_prism_lemma = match (theta_g, q_computed) {
        (Computed::Value(th), Some(q)) => Some(2 * th - q),
        _ => None,
    };
    let mut theta_prism_outcome = value_claim(
        &bundle.claims,
        "theta-prism",
        theta_prism_lemma.map_or(Computed::BudgetExceeded, Computed::Value),
    );
    // direct cross-check when the budget allows it
    let (theta_prism_direct, direct_cover) = theta_of(&g_prism, &mut budget);
    if let Computed::Value(direct) = theta_prism_direct {
        values.push(("theta-prism-direct", theta_prism_direct));
        if let Some(cover) = direct_cover {
            artifacts.push(Artifact {
                name: "theta-prism-direct.cover".into(),
                contents: cover.to_text(),
            });
        }
        if let Some(lemma) = theta_prism_lemma {
            if lemma != direct {
                notes.push(format!(
                    "theta-prism cross-check mismatch: lemma {lemma} direct {direct}"
                ));
                theta_prism_outcome.status = ClaimStatus::Fail;
            }
        }
    }
    outcomes.push(theta_prism_outcome);

    // γ^∞(G□K₂) ≤ 2t−1, certified by the (2t−1)-guard safe family
    let upper_k = (2 * t - 1) as usize;
    let gamma_upper = match is_eternally_k_guardable(&g_prism, upper_k, &budgets.limits) {
        Ok(check) => {
            let guardable = !check.run.family.is_empty();
            artifacts.push(Artifact {
                name: "gamma-prism-upper.cert".into(),
                contents: check.certificate.to_text(),
            });
            if guardable {
                Computed::AtMost(upper_k as u64)
            } else {
                // not guardable with 2t−1: γ^∞ is pinned to θ's side
                Computed::Interval(2 * t, 2 * t)
            }
        }
        Err(EternalError::RankCapExceeded { .. } | EternalError::SweepCapExceeded { .. }) => {
            Computed::BudgetExceeded
        }
        Err(e) => {
            notes.push(format!("gamma-prism-upper solver error: {e}"));
            Computed::BudgetExceeded
        }
    };
    let gamma_upper_within_cap = gamma_upper != Computed::BudgetExceeded;
    outcomes.push(value_claim(&bundle.claims, "gamma-prism-upper", gamma_upper));

    // α(G□K₂) and the exact γ^∞(G□K₂): the theorem asserts they are
    // equal and strictly below θ(G□K₂). Skipped when even the upper
    // guard count already exceeded the rank cap.
    let (alpha_prism, gamma_prism) = if gamma_upper_within_cap {
        let alpha_prism = alpha_of(&g_prism);
        let (gamma_prism, cert) = gamma_of(&g_prism, budgets, &mut budget);
        if let Some(cert) = cert {
            artifacts.push(Artifact { name: "gamma-prism.cert".into(), contents: cert.to_text() });
        }
        (alpha_prism, gamma_prism)
    } else {
        (Computed::BudgetExceeded, Computed::BudgetExceeded)
    };
    values.insert(0, ("alpha-prism", alpha_prism));
    values.insert(1, ("gamma-prism", gamma_prism));
    match (alpha_prism, gamma_prism) {
        (Computed::Value(a), Computed::Value(g)) => {
            let rel = if a == g { "equal" } else { "differ" };
            notes.push(format!(
                "theorem-alpha-gamma-equality alpha-prism {a} gamma-prism {g} {rel}"
            ));
        }
        (Computed::Value(a), Computed::Interval(lo, hi)) => {
            notes.push(format!(
                "theorem-alpha-gamma-equality alpha-prism {a} gamma-prism {lo}..{hi} undecided"
            ));
        }
        _ => notes.push("theorem-alpha-gamma-equality budget-exceeded".into()),
    }

    let verdict = derive_verdict(&outcomes, gamma_prism, t);
    VerifyReport {
        k: bundle.k,
        target: bundle.target,
        w: bundle.w,
        seed: budgets.seed,
        node_budget: budgets.node_budget,
        rank_cap: budgets.limits.rank_cap,
        sweep_cap: budgets.limits.sweep_cap,
        graphs: vec![
            ("M", bundle.tower.n(), bundle.tower.m()),
            ("H", bundle.h.n(), bundle.h.m()),
            ("Hstar", bundle.h_star.n(), bundle.h_star.m()),
            ("G", bundle.g.n(), bundle.g.m()),
            ("GprismK2", g_prism.n(), g_prism.m()),
        ],
        outcomes,
        values,
        notes,
        verdict,
        artifacts,
    }
}

/// "Conjecture refuted" needs two facts: γ^∞(G) = θ(G), and
/// γ^∞(G□K₂) < θ(G□K₂) (from the exact value or the certified upper
/// bound against the verified θ).
fn derive_verdict(outcomes: &[ClaimOutcome], gamma_prism: Computed, t: u64) -> Verdict {
    let status = |name: &str| {
        outcomes
            .iter()
            .find(|o| o.claim.name == name)
            .map(|o| o.status)
            .unwrap_or(ClaimStatus::Inconclusive)
    };
    let premise = [status("gamma-G"), status("theta-G")];
    let theta_prism = status("theta-prism");
    let upper = status("gamma-prism-upper");
    let strict_from_exact = matches!(gamma_prism, Computed::Value(g) if g < 2 * t);
    let required = [premise[0], premise[1], theta_prism];
    if required.iter().any(|s| *s == ClaimStatus::Fail) {
        return Verdict::Failed;
    }
    if required.iter().any(|s| *s == ClaimStatus::Inconclusive) {
        return Verdict::Inconclusive;
    }
    // θ(G□K₂) = 2t is verified here; strictness needs γ^∞ below it
    if upper == ClaimStatus::Ok || strict_from_exact {
        Verdict::ConjectureRefuted
    } else if upper == ClaimStatus::Inconclusive
        || matches!(gamma_prism, Computed::BudgetExceeded | Computed::Interval(_, _))
    {
        Verdict::Inconclusive
    } else {
        Verdict::Failed
    }
}

/// The constructive prism cover behind the identity: one vertical edge
/// block {(v,1),(v,2)} per singleton of the base cover, doubled copies
/// of every larger block. Sizes to 2θ − q blocks.
fn doubled_prism_cover(cover: &CliqueCover, n: usize) -> CliqueCover {
    let mut blocks = Vec::with_capacity(2 * cover.len() - cover.singleton_count());
    for block in &cover.blocks {
        if block.len() == 1 {
            blocks.push(vec![block[0], block[0] + n]);
        } else {
            blocks.push(block.clone());
            blocks.push(block.iter().map(|&v| v + n).collect());
        }
    }
    CliqueCover::new(blocks)
}

/// Both sides of θ(G □ K₂) = 2θ(G) − q, computed independently, plus
/// the constructive prism cover witnessing the upper bound.
#[derive(Debug, Clone)]
pub struct PrismThetaCheck {
    pub theta_g: usize,
    pub q: usize,
    /// 2θ(G) − q.
    pub identity_value: usize,
    /// θ(G □ K₂) by direct exact computation; None if the budget ran out
    /// on the direct side.
    pub direct: Option<usize>,
    pub equal: Option<bool>,
    pub prism_cover: CliqueCover,
}

/// Verifies the prism cover identity on one graph. The identity side
/// (θ(G) and q) must fit the budget; the direct side may exhaust it, in
/// which case the constructive witness is still returned.
pub fn verify_prism_theta(g: &Graph, budget: &mut Budget) -> Result<PrismThetaCheck, BudgetExceeded> {
    let (theta_g, _) = clique_cover_number(g, budget)?;
    let (q, cover) = max_singletons_q(g, budget)?;
    let identity_value = 2 * theta_g - q;
    let prism_cover = doubled_prism_cover(&cover, g.n());
    let p = prism(g);
    debug_assert!(prism_cover.is_valid(&p));
    let direct = match clique_cover_number(&p, budget) {
        Ok((theta, _)) => Some(theta),
        Err(BudgetExceeded { .. }) => None,
    };
    Ok(PrismThetaCheck {
        theta_g,
        q,
        identity_value,
        direct,
        equal: direct.map(|d| d == identity_value),
        prism_cover,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JoinLemmaStatus {
    /// γ^∞(G) ≤ p ≤ θ(G) does not hold; the lemma does not apply.
    HypothesisViolated,
    Holds,
    Fails,
    Inconclusive,
}

/// Check of the join equalities α(G ∨ K̄_p) = γ^∞(G ∨ K̄_p) = p and
/// θ(G ∨ K̄_p) = θ(G), under the hypothesis γ^∞(G) ≤ p ≤ θ(G).
#[derive(Debug, Clone)]
pub struct JoinLemmaReport {
    pub p: usize,
    pub gamma_g: Option<usize>,
    pub theta_g: Option<usize>,
    pub alpha_join: Option<usize>,
    pub gamma_join: Option<usize>,
    pub theta_join: Option<usize>,
    pub status: JoinLemmaStatus,
}

pub fn verify_join_lemma(
    g: &Graph,
    p: usize,
    budgets: &PipelineBudgets,
) -> JoinLemmaReport {
    let mut budget = Budget::new(budgets.node_budget);
    let mut report = JoinLemmaReport {
        p,
        gamma_g: None,
        theta_g: None,
        alpha_join: None,
        gamma_join: None,
        theta_join: None,
        status: JoinLemmaStatus::Inconclusive,
    };
    let gamma_g = match gamma_infinity(g, &budgets.limits, &mut budget) {
        Ok(GammaOutcome::Exact { gamma, .. }) => gamma,
        _ => return report,
    };
    report.gamma_g = Some(gamma_g);
    let theta_g = match clique_cover_number(g, &mut budget) {
        Ok((theta, _)) => theta,
        Err(_) => return report,
    };
    report.theta_g = Some(theta_g);
    if !(gamma_g <= p && p <= theta_g) {
        report.status = JoinLemmaStatus::HypothesisViolated;
        return report;
    }
    let joined = join(g, &empty_graph(p).expect("p >= 1"));
    report.alpha_join = Some(independence_number(&joined).0);
    report.gamma_join = match gamma_infinity(&joined, &budgets.limits, &mut budget) {
        Ok(GammaOutcome::Exact { gamma, .. }) => Some(gamma),
        _ => return report,
    };
    report.theta_join = match clique_cover_number(&joined, &mut budget) {
        Ok((theta, _)) => Some(theta),
        Err(_) => return report,
    };
    let holds = report.alpha_join == Some(p)
        && report.gamma_join == Some(p)
        && report.theta_join == Some(theta_g);
    report.status = if holds {
        JoinLemmaStatus::Holds
    } else {
        JoinLemmaStatus::Fails
    };
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, complete_graph, mycielskian, Graph};
    use crate::pipeline::{build_counterexample, Expected};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn prism_theta_trivial_cases() {
        let mut b = Budget::unlimited();
        let k2 = complete_graph(2).unwrap();
        let check = verify_prism_theta(&k2, &mut b).unwrap();
        assert_eq!((check.theta_g, check.q, check.identity_value), (1, 0, 2));
        assert_eq!(check.direct, Some(2));
        assert_eq!(check.equal, Some(true));

        let e3 = crate::graph::empty_graph(3).unwrap();
        let check = verify_prism_theta(&e3, &mut b).unwrap();
        assert_eq!((check.theta_g, check.q, check.identity_value), (3, 3, 3));
        assert_eq!(check.direct, Some(3));
        assert_eq!(check.equal, Some(true));
        assert_eq!(check.prism_cover.len(), 3);
    }

    #[test]
    fn join_lemma_on_h() {
        // (complement(Grötzsch), 3): α = γ^∞ = 3, θ = 4 on the join
        let (grotzsch, _) = mycielskian(&cycle(5));
        let h = complement(&grotzsch);
        let report = verify_join_lemma(&h, 3, &PipelineBudgets::default());
        assert_eq!(report.status, JoinLemmaStatus::Holds);
        assert_eq!(report.alpha_join, Some(3));
        assert_eq!(report.gamma_join, Some(3));
        assert_eq!(report.theta_join, Some(4));
    }

    #[test]
    fn join_lemma_hypothesis_violated_on_c5() {
        // γ^∞(C_5) = 3 > 2, so p = 2 violates the hypothesis
        let report = verify_join_lemma(&cycle(5), 2, &PipelineBudgets::default());
        assert_eq!(report.status, JoinLemmaStatus::HypothesisViolated);
        assert_eq!(report.gamma_g, Some(3));
    }

    #[test]
    fn join_lemma_k3_p1() {
        let report = verify_join_lemma(&complete_graph(3).unwrap(), 1, &PipelineBudgets::default());
        assert_eq!(report.status, JoinLemmaStatus::Holds);
        assert_eq!(report.alpha_join, Some(1));
        assert_eq!(report.gamma_join, Some(1));
        assert_eq!(report.theta_join, Some(1));
    }

    #[test]
    fn claim_judging() {
        let claim = |e| Claim { name: "x", expected: e };
        let j = |e, c| ClaimOutcome::judge(claim(e), c).status;
        assert_eq!(j(Expected::Value(4), Computed::Value(4)), ClaimStatus::Ok);
        assert_eq!(j(Expected::Value(4), Computed::Value(5)), ClaimStatus::Fail);
        assert_eq!(j(Expected::Value(4), Computed::BudgetExceeded), ClaimStatus::Inconclusive);
        assert_eq!(j(Expected::AtMost(7), Computed::AtMost(7)), ClaimStatus::Ok);
        assert_eq!(j(Expected::AtMost(7), Computed::Interval(8, 8)), ClaimStatus::Fail);
        assert_eq!(j(Expected::Value(4), Computed::Interval(3, 5)), ClaimStatus::Inconclusive);
        assert_eq!(j(Expected::Value(4), Computed::Interval(5, 6)), ClaimStatus::Fail);
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        let bundle = build_counterexample(2, 0).unwrap();
        let budgets = PipelineBudgets {
            node_budget: 10,
            ..PipelineBudgets::default()
        };
        let report = verify_counterexample(&bundle, &budgets);
        assert_eq!(report.verdict, Verdict::Inconclusive);
        assert!(report.any_claim_inconclusive());
        assert!(!report.any_claim_failed());
    }
}
