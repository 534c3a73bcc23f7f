//! Closed-form building blocks shared by the solvers: the two-block fused
//! quadratic solve and the block (group) soft-threshold.

use crate::counters::{ops, OpCounters};

/// Data of the two-block problem
/// `min_{x,y} c1 ||x - a||^2 + c2 ||y - b||^2 + lambda ||x - y||`.
#[derive(Debug, Clone)]
pub struct FusedPairInput {
    pub c1: f64,
    pub c2: f64,
    pub a: Vec<f64>,
    pub b: Vec<f64>,
    pub lambda: f64,
}

impl FusedPairInput {
    /// # Panics
    /// Panics if `c1 <= 0`, `c2 <= 0`, `lambda < 0`, or the centers have
    /// different dimensions.
    pub fn new(c1: f64, c2: f64, a: Vec<f64>, b: Vec<f64>, lambda: f64) -> Self {
        assert!(c1 > 0.0 && c2 > 0.0, "quadratic coefficients must be positive");
        assert!(lambda >= 0.0, "penalty weight must be nonnegative");
        assert_eq!(a.len(), b.len(), "centers must have equal dimension");
        FusedPairInput { c1, c2, a, b, lambda }
    }
}

/// Minimizer of `c1 ||x - a||^2 + c2 ||y - b||^2 + lambda ||x - y||`.
///
/// If `2 c1 c2 ||a - b|| <= (c1 + c2) lambda` the blocks merge and both
/// outputs equal the weighted average `(c1 a + c2 b) / (c1 + c2)`;
/// otherwise each center moves toward the other by `lambda / (2 c)` along
/// the unit difference direction. The two branches coincide at equality, so
/// ties take the merge branch.
pub fn fused_pair_solve(input: &FusedPairInput) -> (Vec<f64>, Vec<f64>) {
    let p = input.a.len();
    let mut x = vec![0.0; p];
    let mut y = vec![0.0; p];
    let mut scratch = OpCounters::new();
    fused_pair_solve_counted(
        input.c1,
        input.c2,
        &input.a,
        &input.b,
        input.lambda,
        &mut x,
        &mut y,
        &mut scratch,
    );
    (x, y)
}

/// Counted in-place form of [`fused_pair_solve`] used inside the solver
/// update loops. `x` and `y` receive the two minimizers.
#[allow(clippy::too_many_arguments)]
pub fn fused_pair_solve_counted(
    c1: f64,
    c2: f64,
    a: &[f64],
    b: &[f64],
    lambda: f64,
    x: &mut [f64],
    y: &mut [f64],
    counters: &mut OpCounters,
) {
    debug_assert!(c1 > 0.0 && c2 > 0.0 && lambda >= 0.0);
    let mut diff = vec![0.0; a.len()];
    ops::sub_into(&mut diff, a, b, counters);
    let dist = ops::norm(&diff, counters);
    if ops::le(2.0 * c1 * c2 * dist, (c1 + c2) * lambda, counters) {
        let total = c1 + c2;
        ops::scale_into(x, a, c1 / total, counters);
        ops::axpy(x, c2 / total, b, counters);
        y.copy_from_slice(x);
    } else {
        // dist > 0 here: dist = 0 always satisfies the merge condition.
        debug_assert!(dist > 0.0);
        x.copy_from_slice(a);
        ops::axpy(x, -lambda / (2.0 * c1 * dist), &diff, counters);
        y.copy_from_slice(b);
        ops::axpy(y, lambda / (2.0 * c2 * dist), &diff, counters);
    }
}

/// Block (group) soft-threshold: the minimizer of
/// `0.5 ||z - v||^2 + kappa ||z||`.
///
/// Returns `0` when `||v|| <= kappa`, else `(1 - kappa / ||v||) v`.
pub fn block_soft_threshold(v: &[f64], kappa: f64) -> Vec<f64> {
    let mut out = v.to_vec();
    let mut scratch = OpCounters::new();
    block_soft_threshold_counted(&mut out, kappa, &mut scratch);
    out
}

/// Counted in-place form of [`block_soft_threshold`].
pub fn block_soft_threshold_counted(v: &mut [f64], kappa: f64, counters: &mut OpCounters) {
    debug_assert!(kappa >= 0.0);
    let n = ops::norm(v, counters);
    if ops::le(n, kappa, counters) {
        v.fill(0.0);
    } else {
        ops::scale(v, 1.0 - kappa / n, counters);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(got: &[f64], want: &[f64], tol: f64) {
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(want) {
            assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
        }
    }

    #[test]
    fn equal_centers_merge() {
        let input = FusedPairInput::new(0.7, 2.3, vec![1.0, 1.0], vec![1.0, 1.0], 0.4);
        let (x, y) = fused_pair_solve(&input);
        assert_close(&x, &[1.0, 1.0], 1e-15);
        assert_close(&y, &[1.0, 1.0], 1e-15);
    }

    #[test]
    fn symmetric_merge_hits_midpoint() {
        // 2*1*1*2 = 4 <= 2*10 = 20: merge branch, midpoint by symmetry.
        let input = FusedPairInput::new(1.0, 1.0, vec![1.0, 0.0], vec![-1.0, 0.0], 10.0);
        let (x, y) = fused_pair_solve(&input);
        assert_close(&x, &[0.0, 0.0], 1e-15);
        assert_close(&y, &[0.0, 0.0], 1e-15);
    }

    #[test]
    fn separate_branch_moves_centers() {
        // 2*1*2*2 = 8 > 3*1 = 3: separate branch.
        let input = FusedPairInput::new(1.0, 2.0, vec![2.0, 0.0], vec![0.0, 0.0], 1.0);
        let (x, y) = fused_pair_solve(&input);
        assert_close(&x, &[1.5, 0.0], 1e-12);
        assert_close(&y, &[0.25, 0.0], 1e-12);
    }

    #[test]
    fn threshold_kills_small_and_boundary_inputs() {
        assert_close(&block_soft_threshold(&[0.1, 0.1], 1.0), &[0.0, 0.0], 0.0);
        // ||(3,4)|| = 5 exactly: boundary maps to zero.
        assert_close(&block_soft_threshold(&[3.0, 4.0], 5.0), &[0.0, 0.0], 0.0);
    }

    #[test]
    fn threshold_shrinks_large_inputs() {
        assert_close(&block_soft_threshold(&[3.0, 4.0], 1.0), &[2.4, 3.2], 1e-12);
    }

    #[test]
    fn counted_ops_match_expected_shape() {
        let mut c = OpCounters::new();
        let mut x = vec![0.0; 2];
        let mut y = vec![0.0; 2];
        fused_pair_solve_counted(1.0, 1.0, &[1.0, 0.0], &[0.0, 0.0], 5.0, &mut x, &mut y, &mut c);
        assert_eq!(c.norms, 1);
        assert_eq!(c.comps, 1);
        assert!(c.mults >= 2 && c.adds >= 2);
    }
}
