//! Operation counters for the per-iteration cost accounting.
//!
//! Every counted unit acts on one length-`p` vector: multiplying it by a
//! scalar, adding two of them, taking its Euclidean norm, or comparing two
//! scalars derived from them. Only the solver update formulas are
//! instrumented; diagnostics (objective values, residual norms, trace
//! bookkeeping) are not counted.

/// Cumulative counts of length-`p` vector operations.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounters {
    /// Scalar-times-vector multiplications.
    pub mults: u64,
    /// Vector-plus-vector additions (subtractions included).
    pub adds: u64,
    /// Euclidean norm evaluations.
    pub norms: u64,
    /// Scalar comparisons.
    pub comps: u64,
}

impl OpCounters {
    pub fn new() -> Self {
        Self::default()
    }

    /// `true` if every component of `self` is `<=` the matching component
    /// of `other`.
    pub fn dominated_by(&self, other: &OpCounters) -> bool {
        self.mults <= other.mults
            && self.adds <= other.adds
            && self.norms <= other.norms
            && self.comps <= other.comps
    }
}

/// Counted vector kernels. All solver arithmetic goes through these so the
/// counters stay faithful to the update formulas.
pub(crate) mod ops {
    use super::OpCounters;

    /// `out = s * v`
    #[inline]
    pub fn scale_into(out: &mut [f64], v: &[f64], s: f64, c: &mut OpCounters) {
        for (o, x) in out.iter_mut().zip(v) {
            *o = s * x;
        }
        c.mults += 1;
    }

    /// `v *= s`
    #[inline]
    pub fn scale(v: &mut [f64], s: f64, c: &mut OpCounters) {
        for x in v.iter_mut() {
            *x *= s;
        }
        c.mults += 1;
    }

    /// `a += b`
    #[inline]
    pub fn add_assign(a: &mut [f64], b: &[f64], c: &mut OpCounters) {
        for (x, y) in a.iter_mut().zip(b) {
            *x += y;
        }
        c.adds += 1;
    }

    /// `a -= b`
    #[inline]
    pub fn sub_assign(a: &mut [f64], b: &[f64], c: &mut OpCounters) {
        for (x, y) in a.iter_mut().zip(b) {
            *x -= y;
        }
        c.adds += 1;
    }

    /// `out = a - b`
    #[inline]
    pub fn sub_into(out: &mut [f64], a: &[f64], b: &[f64], c: &mut OpCounters) {
        for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
            *o = x - y;
        }
        c.adds += 1;
    }

    /// `a += s * b` (one multiplication, one addition)
    #[inline]
    pub fn axpy(a: &mut [f64], s: f64, b: &[f64], c: &mut OpCounters) {
        for (x, y) in a.iter_mut().zip(b) {
            *x += s * y;
        }
        c.mults += 1;
        c.adds += 1;
    }

    /// Euclidean norm.
    #[inline]
    pub fn norm(v: &[f64], c: &mut OpCounters) -> f64 {
        c.norms += 1;
        v.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// `lhs <= rhs`, counted as one scalar comparison.
    #[inline]
    pub fn le(lhs: f64, rhs: f64, c: &mut OpCounters) -> bool {
        c.comps += 1;
        lhs <= rhs
    }
}
