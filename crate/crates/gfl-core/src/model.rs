//! Problem definition and objective evaluation.
//!
//! A [`ProblemInstance`] couples a graph with per-vertex observations, a
//! penalty weight and a loss model; [`objective`] evaluates
//! `sum_i f_i(x_i) + lambda * sum_{(s,t) in E} ||x_s - x_t||`.

use nalgebra::DMatrix;
use thiserror::Error;

use crate::counters::{ops, OpCounters};
use crate::graph::Graph;
use crate::signal::Signal;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("dimension mismatch: expected {expected} rows of dimension {dim}, got {rows}x{cols}")]
    DimensionMismatch { expected: usize, dim: usize, rows: usize, cols: usize },
    #[error("penalty weight must be nonnegative, got {0}")]
    InvalidLambda(f64),
    #[error("signal dimension must be at least 1")]
    EmptyDimension,
    #[error("unsupported loss kind {0:?} (supported: \"squared\")")]
    UnsupportedLoss(String),
}

/// Per-vertex loss model. The solvers only need three capabilities:
/// evaluating `f_i`, minimizing `f_i(x) + q ||x||^2 + x' t` in closed form
/// (with the quadratic coefficient/center pair it induces), and the Hessian
/// at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LossModel {
    /// `f_i(x) = ||x - y_i||^2`
    Squared,
}

impl LossModel {
    pub fn parse(name: &str) -> Result<Self, ModelError> {
        match name {
            "squared" => Ok(LossModel::Squared),
            other => Err(ModelError::UnsupportedLoss(other.to_string())),
        }
    }

    /// `f_i(x)` given the observation `y_i`.
    pub fn eval(&self, y_i: &[f64], x: &[f64]) -> f64 {
        match self {
            LossModel::Squared => {
                x.iter().zip(y_i).map(|(a, b)| (a - b) * (a - b)).sum::<f64>()
            }
        }
    }

    /// Writes `argmin_x f_i(x) + q ||x||^2 + x' t` into `center` and returns
    /// the curvature coefficient `c` such that
    /// `f_i(x) + q ||x||^2 + x' t = c ||x - center||^2 + const`.
    ///
    /// For the squared loss: `c = 1 + q`, `center = (2 y_i - t) / (2 + 2q)`.
    pub fn quad_solve_counted(
        &self,
        y_i: &[f64],
        q: f64,
        t: &[f64],
        center: &mut [f64],
        counters: &mut OpCounters,
    ) -> f64 {
        debug_assert!(q >= 0.0);
        match self {
            LossModel::Squared => {
                ops::scale_into(center, y_i, 2.0, counters);
                ops::sub_assign(center, t, counters);
                ops::scale(center, 1.0 / (2.0 + 2.0 * q), counters);
                1.0 + q
            }
        }
    }

    /// Hessian of `f_i` at `x` (constant `2 I` for the squared loss).
    pub fn hessian(&self, dim: usize, _y_i: &[f64], _x: &[f64]) -> DMatrix<f64> {
        match self {
            LossModel::Squared => DMatrix::identity(dim, dim) * 2.0,
        }
    }
}

/// A graph-fused-lasso problem: graph, observations, penalty and loss.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub y: Signal,
    pub lambda: f64,
    pub loss: LossModel,
}

impl ProblemInstance {
    pub fn new(
        graph: Graph,
        y: Signal,
        lambda: f64,
        loss: LossModel,
    ) -> Result<Self, ModelError> {
        if y.rows() != graph.vertex_count() {
            return Err(ModelError::DimensionMismatch {
                expected: graph.vertex_count(),
                dim: y.dim(),
                rows: y.rows(),
                cols: y.dim(),
            });
        }
        if y.dim() == 0 {
            return Err(ModelError::EmptyDimension);
        }
        if !(lambda >= 0.0) {
            return Err(ModelError::InvalidLambda(lambda));
        }
        Ok(ProblemInstance { graph, y, lambda, loss })
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Signal dimension `p`.
    pub fn dim(&self) -> usize {
        self.y.dim()
    }

    /// Returns a copy with a different penalty weight.
    pub fn with_lambda(&self, lambda: f64) -> Result<Self, ModelError> {
        ProblemInstance::new(self.graph.clone(), self.y.clone(), lambda, self.loss)
    }
}

/// Evaluates the fused-lasso objective at `x`.
pub fn objective(inst: &ProblemInstance, x: &Signal) -> Result<f64, ModelError> {
    if x.rows() != inst.vertex_count() || x.dim() != inst.dim() {
        return Err(ModelError::DimensionMismatch {
            expected: inst.vertex_count(),
            dim: inst.dim(),
            rows: x.rows(),
            cols: x.dim(),
        });
    }
    let mut total = 0.0;
    for i in 0..inst.vertex_count() {
        total += inst.loss.eval(inst.y.row(i), x.row(i));
    }
    let mut penalty = 0.0;
    for &(s, t) in inst.graph.edges() {
        let diff: f64 = x
            .row(s)
            .iter()
            .zip(x.row(t))
            .map(|(a, b)| (a - b) * (a - b))
            .sum();
        penalty += diff.sqrt();
    }
    Ok(total + inst.lambda * penalty)
}

/// `argmin_x f_i(x) + q ||x||^2 + x' t` for vertex `i`.
///
/// Requires `q > 0`, or `q = 0` with a strongly convex loss (the squared
/// loss qualifies).
pub fn loss_quadratic_solve(
    inst: &ProblemInstance,
    i: usize,
    q: f64,
    t: &[f64],
) -> Vec<f64> {
    assert!(q >= 0.0, "quadratic weight must be nonnegative");
    assert_eq!(t.len(), inst.dim());
    let mut out = vec![0.0; inst.dim()];
    let mut scratch = OpCounters::new();
    inst.loss.quad_solve_counted(inst.y.row(i), q, t, &mut out, &mut scratch);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_vertex(y: Vec<f64>, lambda: f64) -> ProblemInstance {
        let g = Graph::new(1, vec![]).unwrap();
        ProblemInstance::new(g, Signal::from_rows(&[y]), lambda, LossModel::Squared).unwrap()
    }

    #[test]
    fn objective_vanishes_at_observations_without_edges() {
        let inst = single_vertex(vec![0.3, -0.7], 5.0);
        let x = inst.y.clone();
        assert_eq!(objective(&inst, &x).unwrap(), 0.0);
    }

    #[test]
    fn objective_two_vertices_one_edge() {
        let g = Graph::new(2, vec![(0, 1)]).unwrap();
        let inst = ProblemInstance::new(
            g,
            Signal::from_rows(&[vec![0.0], vec![1.0]]),
            2.0,
            LossModel::Squared,
        )
        .unwrap();
        let x = Signal::from_rows(&[vec![0.0], vec![1.0]]);
        assert!((objective(&inst, &x).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn objective_rejects_mismatched_dimensions() {
        let inst = single_vertex(vec![0.0, 0.0], 1.0);
        let bad = Signal::from_rows(&[vec![0.0]]);
        assert!(matches!(
            objective(&inst, &bad),
            Err(ModelError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn quad_solve_trivial_cases() {
        let inst = single_vertex(vec![0.0, 0.0], 0.0);
        assert_eq!(loss_quadratic_solve(&inst, 0, 3.7, &[0.0, 0.0]), vec![0.0, 0.0]);

        let inst = single_vertex(vec![1.0, 1.0], 0.0);
        assert_eq!(loss_quadratic_solve(&inst, 0, 0.0, &[0.0, 0.0]), vec![1.0, 1.0]);
    }

    #[test]
    fn quad_solve_mixed_case() {
        // y = (2,0), t = (1,1), q = 1 -> (2y - t)/4 = (3/4, -1/4)
        let inst = single_vertex(vec![2.0, 0.0], 0.0);
        let got = loss_quadratic_solve(&inst, 0, 1.0, &[1.0, 1.0]);
        assert!((got[0] - 0.75).abs() < 1e-15);
        assert!((got[1] + 0.25).abs() < 1e-15);
    }

    #[test]
    fn loss_parse() {
        assert_eq!(LossModel::parse("squared").unwrap(), LossModel::Squared);
        assert!(matches!(LossModel::parse("huber"), Err(ModelError::UnsupportedLoss(_))));
    }
}
