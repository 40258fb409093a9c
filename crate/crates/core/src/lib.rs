//! Exact combinatorics for eternal domination on graph prisms.
//!
//! The crate builds graphs (Mycielskian towers, joins, prisms), computes
//! α, ω, χ, θ exactly with witnesses, solves the eternal domination game
//! by a greatest-fixed-point sweep over guard configurations, and wires
//! everything into a pipeline that checks a Mycielskian-based family of
//! graphs with γ^∞(G) = θ(G) but γ^∞(G □ K₂) < θ(G □ K₂).
//!
//! All solvers are exact; the exponential ones take explicit budgets and
//! report exhaustion as a distinct outcome instead of approximating.

mod bits;

pub mod eternal;
pub mod graph;
pub mod invariants;
pub mod pipeline;
pub mod random;
pub mod suites;

pub use graph::Graph;

/// Tool version embedded in every report for reproducibility.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
