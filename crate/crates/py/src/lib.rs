//! Python bindings: the graph type with its constructions, the exact
//! invariant solvers, the eternal-domination fixed point, and the
//! counterexample pipeline.
//!
//! Build with `cargo build --release -p guardcover-py`, then import the
//! produced `libguardcover_py.so` as `guardcover_py` (see
//! python/smoke_test.py).

use guardcover::eternal::{
    self, EternalCertificate, GammaOutcome, Limits, VerifyOutcome,
};
use guardcover::graph::{self, Graph, VertexRole};
use guardcover::invariants::{self, Budget};
use guardcover::pipeline::{self, PipelineBudgets};
use guardcover::suites::{self, SuiteConfig, SuiteKind};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn budget_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(format!("budget exceeded: {e}"))
}

/// An immutable simple undirected graph.
#[pyclass(name = "Graph", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    /// Parse an edge-list text ("n m" header, then "u v" lines).
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::parse_edge_list(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn complete(k: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::complete_graph(k).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn empty(p: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::empty_graph(p).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_edges(n, edges).map_err(value_err)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn has_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        if u >= self.inner.n() || v >= self.inner.n() {
            return Err(value_err("vertex out of range"));
        }
        Ok(self.inner.has_edge(u, v))
    }

    fn degree(&self, v: usize) -> PyResult<usize> {
        if v >= self.inner.n() {
            return Err(value_err("vertex out of range"));
        }
        Ok(self.inner.degree(v))
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn complement(&self) -> Self {
        PyGraph { inner: graph::complement(&self.inner) }
    }

    fn join(&self, other: &PyGraph) -> Self {
        PyGraph { inner: graph::join(&self.inner, &other.inner) }
    }

    fn cartesian_product(&self, other: &PyGraph) -> Self {
        PyGraph { inner: graph::cartesian_product(&self.inner, &other.inner) }
    }

    fn prism(&self) -> Self {
        PyGraph { inner: graph::prism(&self.inner) }
    }

    /// Returns (M(G), roles) where roles[i] is "original:j", "shadow:j",
    /// or "apex".
    fn mycielskian(&self) -> (Self, Vec<String>) {
        let (m, labeling) = graph::mycielskian(&self.inner);
        let roles = labeling
            .roles
            .iter()
            .map(|role| match role {
                VertexRole::Original(i) => format!("original:{i}"),
                VertexRole::Shadow(i) => format!("shadow:{i}"),
                VertexRole::Apex => "apex".into(),
                VertexRole::JoinAdded => "join-added".into(),
                VertexRole::Pendant => "pendant".into(),
            })
            .collect();
        (PyGraph { inner: m }, roles)
    }

    fn add_pendant(&self, w: usize) -> PyResult<Self> {
        Ok(PyGraph {
            inner: graph::add_pendant(&self.inner, w).map_err(value_err)?,
        })
    }

    fn to_edge_list(&self) -> String {
        graph::serialize_edge_list(&self.inner)
    }

    fn edge_hash(&self) -> String {
        format!("{:016x}", eternal::edge_hash(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// (omega, witness) by exhaustive branch and bound.
#[pyfunction]
fn max_clique(g: &PyGraph) -> (usize, Vec<usize>) {
    invariants::max_clique(&g.inner)
}

/// (alpha, witness) via the complement clique.
#[pyfunction]
fn independence_number(g: &PyGraph) -> (usize, Vec<usize>) {
    invariants::independence_number(&g.inner)
}

/// (chi, colors) by exact iterated k-colorability.
#[pyfunction]
#[pyo3(signature = (g, budget_nodes=200_000_000))]
fn chromatic_number(g: &PyGraph, budget_nodes: u64) -> PyResult<(usize, Vec<usize>)> {
    let mut budget = Budget::new(budget_nodes);
    let (chi, coloring) =
        invariants::chromatic_number(&g.inner, &mut budget).map_err(budget_err)?;
    Ok((chi, coloring.colors))
}

/// (theta, blocks): a minimum clique cover as a vertex partition.
#[pyfunction]
#[pyo3(signature = (g, budget_nodes=200_000_000))]
fn clique_cover(g: &PyGraph, budget_nodes: u64) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let mut budget = Budget::new(budget_nodes);
    let (theta, cover) =
        invariants::clique_cover_number(&g.inner, &mut budget).map_err(budget_err)?;
    Ok((theta, cover.blocks))
}

/// (critical, failing_vertex).
#[pyfunction]
#[pyo3(signature = (g, budget_nodes=200_000_000))]
fn is_vertex_critical(g: &PyGraph, budget_nodes: u64) -> PyResult<(bool, Option<usize>)> {
    let mut budget = Budget::new(budget_nodes);
    invariants::is_vertex_critical(&g.inner, &mut budget).map_err(budget_err)
}

/// (q, blocks): the maximum singleton count over minimum clique covers,
/// with a witness cover.
#[pyfunction]
#[pyo3(signature = (g, budget_nodes=200_000_000))]
fn max_singletons_q(g: &PyGraph, budget_nodes: u64) -> PyResult<(usize, Vec<Vec<usize>>)> {
    let mut budget = Budget::new(budget_nodes);
    let (q, cover) = invariants::max_singletons_q(&g.inner, &mut budget).map_err(budget_err)?;
    Ok((q, cover.blocks))
}

/// A minimum cover isolating w as a singleton, or None.
#[pyfunction]
#[pyo3(signature = (g, w, budget_nodes=200_000_000))]
fn min_cover_isolating(
    g: &PyGraph,
    w: usize,
    budget_nodes: u64,
) -> PyResult<Option<Vec<Vec<usize>>>> {
    if w >= g.inner.n() {
        return Err(value_err("vertex out of range"));
    }
    let mut budget = Budget::new(budget_nodes);
    let cover = invariants::min_cover_isolating(&g.inner, w, &mut budget).map_err(budget_err)?;
    Ok(cover.map(|c| c.blocks))
}

/// (exact, lower, upper): exact is None when the solver hit a cap, in
/// which case gamma lies in lower..=upper.
#[pyfunction]
#[pyo3(signature = (g, rank_cap=1<<28, sweep_cap=1<<20, budget_nodes=200_000_000))]
fn gamma_infinity(
    g: &PyGraph,
    rank_cap: u64,
    sweep_cap: u64,
    budget_nodes: u64,
) -> PyResult<(Option<usize>, usize, usize)> {
    let limits = Limits { rank_cap, sweep_cap };
    let mut budget = Budget::new(budget_nodes);
    match eternal::gamma_infinity(&g.inner, &limits, &mut budget).map_err(value_err)? {
        GammaOutcome::Exact { gamma, .. } => Ok((Some(gamma), gamma, gamma)),
        GammaOutcome::Bracketed { lower, upper } => Ok((None, lower, upper)),
    }
}

/// Whether k guards can defend every infinite attack sequence.
#[pyfunction]
#[pyo3(signature = (g, k, rank_cap=1<<28, sweep_cap=1<<20))]
fn is_eternally_k_guardable(g: &PyGraph, k: usize, rank_cap: u64, sweep_cap: u64) -> PyResult<bool> {
    let limits = Limits { rank_cap, sweep_cap };
    let check = eternal::is_eternally_k_guardable(&g.inner, k, &limits).map_err(value_err)?;
    Ok(!check.run.family.is_empty())
}

/// The eternal-cert v1 text for (g, k).
#[pyfunction]
#[pyo3(signature = (g, k, rank_cap=1<<28, sweep_cap=1<<20))]
fn certificate_text(g: &PyGraph, k: usize, rank_cap: u64, sweep_cap: u64) -> PyResult<String> {
    let limits = Limits { rank_cap, sweep_cap };
    let check = eternal::is_eternally_k_guardable(&g.inner, k, &limits).map_err(value_err)?;
    Ok(check.certificate.to_text())
}

/// (accepted, reason): independent re-check of a certificate text.
#[pyfunction]
fn verify_certificate(g: &PyGraph, cert_text: &str) -> PyResult<(bool, Option<String>)> {
    let cert = EternalCertificate::parse(cert_text).map_err(value_err)?;
    match eternal::verify_certificate(&g.inner, &cert).map_err(value_err)? {
        VerifyOutcome::Accepted => Ok((true, None)),
        VerifyOutcome::Rejected(reason) => Ok((false, Some(reason))),
    }
}

/// The iterated Mycielskian M_k^l.
#[pyfunction]
fn build_tower(k: usize, l: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: pipeline::build_tower(k, l).map_err(value_err)?,
    })
}

/// The counterexample graph G for a given k (pendant at w).
#[pyfunction]
#[pyo3(signature = (k, w=0))]
fn build_counterexample(k: usize, w: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: pipeline::build_counterexample(k, w).map_err(value_err)?.g,
    })
}

/// Runs the full refutation pipeline; returns (verdict, report_text).
#[pyfunction]
#[pyo3(signature = (k, w=0, budget_nodes=200_000_000, rank_cap=1<<28, sweep_cap=1<<20))]
fn refute_conjecture(
    k: usize,
    w: usize,
    budget_nodes: u64,
    rank_cap: u64,
    sweep_cap: u64,
) -> PyResult<(String, String)> {
    let bundle = pipeline::build_counterexample(k, w).map_err(value_err)?;
    let budgets = PipelineBudgets {
        node_budget: budget_nodes,
        limits: Limits { rank_cap, sweep_cap },
        seed: 0,
    };
    let report = pipeline::verify_counterexample(&bundle, &budgets);
    Ok((report.verdict.as_str().to_string(), report.render()))
}

/// Runs a named property suite; returns (passed, report_text).
#[pyfunction]
#[pyo3(signature = (name, seed=0, samples=100))]
fn run_suite(name: &str, seed: u64, samples: usize) -> PyResult<(bool, String)> {
    let kind = SuiteKind::from_name(name)
        .ok_or_else(|| value_err(format!("unknown suite {name:?}")))?;
    let cfg = SuiteConfig {
        seed,
        samples,
        ..SuiteConfig::default()
    };
    let report = suites::run_suite(kind, &cfg).map_err(budget_err)?;
    Ok((report.passed(), report.render()))
}

#[pymodule]
fn guardcover_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(max_clique, m)?)?;
    m.add_function(wrap_pyfunction!(independence_number, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_number, m)?)?;
    m.add_function(wrap_pyfunction!(clique_cover, m)?)?;
    m.add_function(wrap_pyfunction!(is_vertex_critical, m)?)?;
    m.add_function(wrap_pyfunction!(max_singletons_q, m)?)?;
    m.add_function(wrap_pyfunction!(min_cover_isolating, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_infinity, m)?)?;
    m.add_function(wrap_pyfunction!(is_eternally_k_guardable, m)?)?;
    m.add_function(wrap_pyfunction!(certificate_text, m)?)?;
    m.add_function(wrap_pyfunction!(verify_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(build_tower, m)?)?;
    m.add_function(wrap_pyfunction!(build_counterexample, m)?)?;
    m.add_function(wrap_pyfunction!(refute_conjecture, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    m.add("__version__", guardcover::VERSION)?;
    Ok(())
}
