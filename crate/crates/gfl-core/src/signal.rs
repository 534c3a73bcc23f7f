//! Dense stacks of equal-length vectors.
//!
//! Per-vertex signals, per-edge auxiliary variables and dual variables are
//! all stacks of vectors in `R^p`; this module holds the one container they
//! share.

/// A stack of `rows` vectors, each of dimension `dim`, stored contiguously.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    rows: usize,
    dim: usize,
    data: Vec<f64>,
}

impl Signal {
    pub fn zeros(rows: usize, dim: usize) -> Self {
        Signal { rows, dim, data: vec![0.0; rows * dim] }
    }

    /// Builds a stack from a flat row-major buffer.
    ///
    /// # Panics
    /// Panics if `data.len() != rows * dim`.
    pub fn from_flat(rows: usize, dim: usize, data: Vec<f64>) -> Self {
        assert_eq!(data.len(), rows * dim, "flat buffer length mismatch");
        Signal { rows, dim, data }
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Self {
        let dim = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "ragged rows");
            data.extend_from_slice(r);
        }
        Signal { rows: rows.len(), dim, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [f64] {
        &mut self.data[i * self.dim..(i + 1) * self.dim]
    }

    /// Mutable access to two distinct rows at once.
    ///
    /// # Panics
    /// Panics if `i == j`.
    #[inline]
    pub fn two_rows_mut(&mut self, i: usize, j: usize) -> (&mut [f64], &mut [f64]) {
        assert_ne!(i, j);
        let d = self.dim;
        if i < j {
            let (a, b) = self.data.split_at_mut(j * d);
            (&mut a[i * d..(i + 1) * d], &mut b[..d])
        } else {
            let (a, b) = self.data.split_at_mut(i * d);
            (&mut b[..d], &mut a[j * d..(j + 1) * d])
        }
    }

    pub fn as_flat(&self) -> &[f64] {
        &self.data
    }

    pub fn fill(&mut self, v: f64) {
        self.data.fill(v);
    }

    pub fn copy_from(&mut self, other: &Signal) {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.dim, other.dim);
        self.data.copy_from_slice(&other.data);
    }

    /// Euclidean norm of the whole stack viewed as one long vector.
    pub fn flat_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// `max_i |data_i|` over the whole stack; 0 for an empty stack.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Euclidean distance to `other` viewed as one long vector.
    pub fn flat_distance(&self, other: &Signal) -> f64 {
        assert_eq!(self.data.len(), other.data.len());
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_rows_mut_disjoint() {
        let mut s = Signal::from_flat(3, 2, vec![0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        let (a, b) = s.two_rows_mut(2, 0);
        assert_eq!(a, &[4.0, 5.0]);
        assert_eq!(b, &[0.0, 1.0]);
        a[0] = 9.0;
        b[1] = -1.0;
        assert_eq!(s.row(2), &[9.0, 5.0]);
        assert_eq!(s.row(0), &[0.0, -1.0]);
    }

    #[test]
    fn flat_distance_matches_manual() {
        let a = Signal::from_flat(2, 2, vec![1.0, 0.0, 0.0, 0.0]);
        let b = Signal::from_flat(2, 2, vec![0.0, 0.0, 0.0, 2.0]);
        assert!((a.flat_distance(&b) - f64::sqrt(5.0)).abs() < 1e-15);
    }
}
