//! Solvers for the graph-fused lasso
//!
//! ```text
//!     minimize over x_1, ..., x_n in R^p:
//!         sum_i f_i(x_i) + lambda * sum_{(s,t) in E} ||x_s - x_t||
//! ```
//!
//! over an arbitrary graph, where `f_i` is a per-vertex loss (squared loss
//! `||x - y_i||^2` built in) and the penalty couples signals across edges
//! with unsquared Euclidean norms.
//!
//! The crate provides three ADMM solvers that all minimize the same
//! objective but split it differently:
//!
//! * [`admm::solve_decomposed`] — the matching-decomposed, preconditioned
//!   ADMM. Edges are partitioned into a matching `E0` and a remainder `E1`;
//!   the `E0` part of the penalty stays inside the x-update (solved in
//!   closed form pair by pair), and only `E1` edges carry auxiliary
//!   difference variables.
//! * [`admm::solve_network`] — the network-lasso baseline, which copies
//!   both endpoints of every edge.
//! * [`admm::solve_reference_split`] — plain (unpreconditioned) ADMM on the
//!   matching-decomposed formulation with endpoint copies on `E1` edges.
//!   It exists mainly as an equivalence oracle for the decomposed solver:
//!   with twice the penalty parameter it reproduces its x-iterates exactly.
//!
//! [`rate`] predicts the local linear convergence factor `c(rho)` of these
//! solvers from curvature information at the solution, and [`data`]
//! generates the synthetic chain/grid instances used by the benchmark
//! harness in the companion CLI crate.

pub mod admm;
pub mod counters;
pub mod data;
pub mod graph;
pub mod model;
pub mod prox;
pub mod rate;
pub mod signal;

pub use admm::{residuals, solve_decomposed, solve_network, solve_reference_split};
pub use admm::{ConvergenceTrace, SolveOptions, SolverState, TraceRecord};
pub use counters::OpCounters;
pub use graph::{EdgePartition, Graph};
pub use model::{LossModel, ProblemInstance};
pub use signal::Signal;
