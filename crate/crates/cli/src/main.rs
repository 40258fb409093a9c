//! guardcover: construct graphs, compute exact invariants, solve the
//! eternal domination game, run the conjecture refutation pipeline, and
//! verify certificates.
//!
//! Exit codes: 0 success/verified, 1 claim failure or rejection,
//! 2 inconclusive (budget), 64 usage error, 65 data format error.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use guardcover::eternal::{
    edge_hash, gamma_infinity, verify_certificate, EternalCertificate, GammaOutcome, Limits,
    VerifyOutcome,
};
use guardcover::graph::{
    self, parse_edge_list, serialize_edge_list, Graph,
};
use guardcover::invariants::{Budget, GammaValue, ParamsReport};
use guardcover::pipeline::{
    build_counterexample, build_tower, verify_counterexample, PipelineBudgets, Verdict,
    VerifyReport,
};
use guardcover::suites::{run_suite, SuiteConfig, SuiteKind};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_CLAIM_FAILURE: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "guardcover", version, about)]
struct Cli {
    /// Node budget for the exact coloring-family solvers.
    #[arg(long, global = true, default_value_t = 200_000_000)]
    budget_nodes: u64,
    /// Maximum number of k-subset ranks the fixed point may allocate.
    #[arg(long, global = true, default_value_t = 1 << 28)]
    rank_cap: u64,
    /// Maximum number of deletion sweeps per fixed point.
    #[arg(long, global = true, default_value_t = 1 << 20)]
    sweep_cap: u64,
    /// Seed for the randomized property suites (embedded in reports).
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for the fixed-point sweep (output-invariant).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Output path (construct, params, refute write files here).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a graph and write it in edge-list form.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Compute alpha, omega, chi, theta (optionally gamma) with witnesses.
    Params {
        graph: PathBuf,
        /// Also compute the eternal domination number with a certificate.
        #[arg(long)]
        gamma: bool,
        /// Certificate output path (default: <graph>.gamma.cert).
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Build the counterexample chain for a given k and verify it.
    Refute {
        k: usize,
        /// Pendant attachment vertex in H (default 0).
        #[arg(long, default_value_t = 0)]
        w: usize,
        /// Verify every choice of w in V(H).
        #[arg(long)]
        all_w: bool,
    },
    /// Run a seeded property suite.
    Suite {
        name: String,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Check an eternal-guardability certificate against a graph.
    VerifyCert { graph: PathBuf, cert: PathBuf },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Complete graph K_k.
    Complete { k: usize },
    /// Edgeless graph on p vertices.
    Empty { p: usize },
    Complement { graph: PathBuf },
    Join { a: PathBuf, b: PathBuf },
    /// Cartesian product (pair (u,v) encoded as u*n_b + v).
    Product { a: PathBuf, b: PathBuf },
    /// Prism G □ K_2 (copy 1 at 0..n-1, copy 2 at n..2n-1).
    Prism { graph: PathBuf },
    Mycielskian { graph: PathBuf },
    /// Iterated Mycielskian M_k^l.
    Tower { k: usize, l: usize },
    /// The counterexample graph G for a given k (pendant at --w).
    Counterexample {
        k: usize,
        #[arg(long, default_value_t = 0)]
        w: usize,
    },
}

enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn report(self) -> ExitCode {
        match self {
            Failure::Usage(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_USAGE)
            }
            Failure::Data(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(EXIT_DATA)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(threads) = cli.threads {
        // deterministic output regardless of the worker count
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(failure) => failure.report(),
    }
}

fn limits(cli: &Cli) -> Limits {
    Limits {
        rank_cap: cli.rank_cap,
        sweep_cap: cli.sweep_cap,
    }
}

fn budgets(cli: &Cli) -> PipelineBudgets {
    PipelineBudgets {
        node_budget: cli.budget_nodes,
        limits: limits(cli),
        seed: cli.seed,
    }
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Data(format!("{}: {e}", path.display())))?;
    parse_edge_list(&text).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)
                .map_err(|e| Failure::Data(format!("{}: {e}", parent.display())))?;
        }
    }
    std::fs::write(path, contents).map_err(|e| Failure::Data(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match &cli.cmd {
        Cmd::Construct { kind } => cmd_construct(&cli, kind),
        Cmd::Params { graph, gamma, cert } => cmd_params(&cli, graph, *gamma, cert.as_deref()),
        Cmd::Refute { k, w, all_w } => cmd_refute(&cli, *k, *w, *all_w),
        Cmd::Suite { name, samples } => cmd_suite(&cli, name, *samples),
        Cmd::VerifyCert { graph, cert } => cmd_verify_cert(graph, cert),
    }
}

fn cmd_construct(cli: &Cli, kind: &ConstructKind) -> Result<ExitCode, Failure> {
    let usage = |e: graph::GraphError| Failure::Usage(e.to_string());
    let g = match kind {
        ConstructKind::Complete { k } => graph::complete_graph(*k).map_err(usage)?,
        ConstructKind::Empty { p } => graph::empty_graph(*p).map_err(usage)?,
        ConstructKind::Complement { graph } => graph::complement(&load_graph(graph)?),
        ConstructKind::Join { a, b } => graph::join(&load_graph(a)?, &load_graph(b)?),
        ConstructKind::Product { a, b } => {
            graph::cartesian_product(&load_graph(a)?, &load_graph(b)?)
        }
        ConstructKind::Prism { graph } => graph::prism(&load_graph(graph)?),
        ConstructKind::Mycielskian { graph } => graph::mycielskian(&load_graph(graph)?).0,
        ConstructKind::Tower { k, l } => {
            build_tower(*k, *l).map_err(|e| Failure::Usage(e.to_string()))?
        }
        ConstructKind::Counterexample { k, w } => build_counterexample(*k, *w)
            .map_err(|e| Failure::Usage(e.to_string()))?
            .g,
    };
    let text = serialize_edge_list(&g);
    match &cli.out {
        Some(path) => {
            write_file(path, &text)?;
            println!("{} {}", g.n(), g.m());
        }
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn render_params(cli: &Cli, g: &Graph, report: &ParamsReport, cert_path: Option<&Path>) -> String {
    let mut out = String::new();
    out.push_str("params-report v1\n");
    let _ = writeln!(out, "version {}", guardcover::VERSION);
    let _ = writeln!(out, "seed {}", cli.seed);
    let _ = writeln!(out, "budget-nodes {}", cli.budget_nodes);
    let _ = writeln!(out, "rank-cap {}", cli.rank_cap);
    let _ = writeln!(out, "sweep-cap {}", cli.sweep_cap);
    let _ = writeln!(out, "graph n {} m {}", report.n, report.m);
    let witness = |verts: &[usize]| {
        verts
            .iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(out, "alpha {} witness {}", report.alpha, witness(&report.alpha_witness));
    let _ = writeln!(out, "omega {} witness {}", report.omega, witness(&report.omega_witness));
    match report.chi {
        Some(chi) => {
            let _ = writeln!(out, "chi {chi}");
        }
        None => out.push_str("chi budget-exceeded\n"),
    }
    match report.theta {
        Some(theta) => {
            let _ = writeln!(out, "theta {theta}");
        }
        None => out.push_str("theta budget-exceeded\n"),
    }
    match &report.gamma {
        Some(GammaValue::Exact(gamma)) => {
            let path = cert_path.expect("cert path accompanies exact gamma");
            let _ = writeln!(out, "gamma {gamma} certificate {}", path.display());
        }
        Some(GammaValue::Bracketed { lower, upper }) => {
            let _ = writeln!(out, "gamma {lower}..{upper} budget-exceeded");
        }
        None => {}
    }
    match report.consistency_error(g) {
        None => out.push_str("consistency ok\n"),
        Some(err) => {
            let _ = writeln!(out, "consistency FAILED {err}");
        }
    }
    if let Some(coloring) = &report.coloring {
        out.push_str("witness coloring\n");
        out.push_str(&coloring.to_text());
    }
    if let Some(cover) = &report.cover {
        out.push_str("witness cover\n");
        out.push_str(&cover.to_text());
    }
    out
}

fn cmd_params(
    cli: &Cli,
    graph_path: &Path,
    gamma: bool,
    cert: Option<&Path>,
) -> Result<ExitCode, Failure> {
    let g = load_graph(graph_path)?;
    let mut budget = Budget::new(cli.budget_nodes);
    let mut report = ParamsReport::compute(&g, &mut budget);
    let mut cert_out: Option<(PathBuf, String)> = None;
    if gamma {
        let default_path = || {
            let mut p = graph_path.as_os_str().to_owned();
            p.push(".gamma.cert");
            PathBuf::from(p)
        };
        let cert_path = cert.map(Path::to_path_buf).unwrap_or_else(default_path);
        match gamma_infinity(&g, &limits(cli), &mut budget) {
            Ok(GammaOutcome::Exact { gamma, check }) => {
                report.gamma = Some(GammaValue::Exact(gamma));
                cert_out = Some((cert_path, check.certificate.to_text()));
            }
            Ok(GammaOutcome::Bracketed { lower, upper }) => {
                report.gamma = Some(GammaValue::Bracketed { lower, upper });
            }
            Err(e) => return Err(Failure::Data(format!("gamma solver: {e}"))),
        }
    }
    let text = render_params(cli, &g, &report, cert_out.as_ref().map(|(p, _)| p.as_path()));
    print!("{text}");
    if let Some((path, contents)) = &cert_out {
        write_file(path, contents)?;
    }
    if let Some(out) = &cli.out {
        write_file(out, &text)?;
    }
    if report.consistency_error(&g).is_some() {
        return Ok(ExitCode::from(EXIT_CLAIM_FAILURE));
    }
    let inconclusive = report.chi.is_none()
        || report.theta.is_none()
        || matches!(report.gamma, Some(GammaValue::Bracketed { .. }));
    if inconclusive {
        return Ok(ExitCode::from(EXIT_INCONCLUSIVE));
    }
    Ok(ExitCode::SUCCESS)
}

fn report_exit(report: &VerifyReport) -> ExitCode {
    if report.any_claim_failed() || report.verdict == Verdict::Failed {
        ExitCode::from(EXIT_CLAIM_FAILURE)
    } else if report.verdict == Verdict::ConjectureRefuted {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_INCONCLUSIVE)
    }
}

fn write_artifacts(report: &VerifyReport, dir: &Path) -> Result<(), Failure> {
    write_file(&dir.join("report.txt"), &report.render())?;
    for artifact in &report.artifacts {
        write_file(&dir.join(&artifact.name), &artifact.contents)?;
    }
    Ok(())
}

fn cmd_refute(cli: &Cli, k: usize, w: usize, all_w: bool) -> Result<ExitCode, Failure> {
    let budgets = budgets(cli);
    if !all_w {
        let bundle = build_counterexample(k, w).map_err(|e| Failure::Usage(e.to_string()))?;
        let report = verify_counterexample(&bundle, &budgets);
        print!("{}", report.render());
        if let Some(dir) = &cli.out {
            write_artifacts(&report, dir)?;
        }
        return Ok(report_exit(&report));
    }

    let order = build_counterexample(k, 0)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .h
        .n();
    let mut refuted = 0usize;
    let mut worst = ExitCode::SUCCESS;
    for w in 0..order {
        let bundle = build_counterexample(k, w).expect("w ranges over V(H)");
        let report = verify_counterexample(&bundle, &budgets);
        print!("{}", report.render());
        if let Some(dir) = &cli.out {
            write_artifacts(&report, &dir.join(format!("w{w}")))?;
        }
        if report.verdict == Verdict::ConjectureRefuted {
            refuted += 1;
        }
        let exit = report_exit(&report);
        if exit != ExitCode::SUCCESS && worst == ExitCode::SUCCESS {
            worst = exit;
        } else if exit == ExitCode::from(EXIT_CLAIM_FAILURE) {
            worst = exit;
        }
    }
    println!("allw-summary refuted {refuted}/{order}");
    Ok(worst)
}

fn cmd_suite(cli: &Cli, name: &str, samples: usize) -> Result<ExitCode, Failure> {
    let kind = SuiteKind::from_name(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown suite {name:?}; known suites: {}",
            SuiteKind::ALL
                .iter()
                .map(|k| k.name())
                .collect::<Vec<_>>()
                .join(", ")
        ))
    })?;
    let cfg = SuiteConfig {
        seed: cli.seed,
        samples,
        node_budget: cli.budget_nodes,
        limits: limits(cli),
    };
    match run_suite(kind, &cfg) {
        Ok(report) => {
            print!("{}", report.render());
            if let Some(out) = &cli.out {
                write_file(out, &report.render())?;
            }
            if report.passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_CLAIM_FAILURE))
            }
        }
        Err(e) => {
            eprintln!("suite aborted: {e}");
            Ok(ExitCode::from(EXIT_INCONCLUSIVE))
        }
    }
}

fn cmd_verify_cert(graph_path: &Path, cert_path: &Path) -> Result<ExitCode, Failure> {
    let g = load_graph(graph_path)?;
    let cert_text = std::fs::read_to_string(cert_path)
        .map_err(|e| Failure::Data(format!("{}: {e}", cert_path.display())))?;
    let cert = EternalCertificate::parse(&cert_text)
        .map_err(|e| Failure::Data(format!("{}: {e}", cert_path.display())))?;
    match verify_certificate(&g, &cert) {
        Ok(VerifyOutcome::Accepted) => {
            println!("certificate accepted (edge hash {:016x})", edge_hash(&g));
            Ok(ExitCode::SUCCESS)
        }
        Ok(VerifyOutcome::Rejected(reason)) => {
            println!("certificate rejected: {reason}");
            Ok(ExitCode::from(EXIT_CLAIM_FAILURE))
        }
        Err(e) => {
            println!("certificate rejected: {e}");
            Ok(ExitCode::from(EXIT_CLAIM_FAILURE))
        }
    }
}
