//! Eigenvalues of symmetric tridiagonal matrices by Sturm bisection.
//!
//! This is the small dense kernel behind the Krylov solvers: they reduce
//! the large sparse problem to a tridiagonal one and ask for its extreme
//! eigenvalues here. Bisection is branch-stable, so the same matrix always
//! produces bit-identical eigenvalues.

/// Symmetric tridiagonal matrix: `diag` of length m, `off` of length m-1.
/// Zero entries in `off` are allowed; the matrix then decouples into
/// independent blocks, which the Sturm count handles transparently.
#[derive(Clone, Debug)]
pub struct Tridiagonal {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl Tridiagonal {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Self {
        assert!(!diag.is_empty(), "matrix must be nonempty");
        assert_eq!(off.len() + 1, diag.len(), "off-diagonal length mismatch");
        Tridiagonal { diag, off }
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// Gershgorin bounds: every eigenvalue lies in [lo, hi].
    fn bounds(&self) -> (f64, f64) {
        let m = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..m {
            let left = if i > 0 { self.off[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < m { self.off[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Number of eigenvalues strictly below `x` via the Sturm sequence of
    /// the shifted LDL factorization.
    fn count_below(&self, x: f64) -> usize {
        // Guards pivots away from zero; an exact zero pivot means x hits
        // an eigenvalue of a leading minor.
        let pivmin = f64::MIN_POSITIVE
            * self.off.iter().fold(1.0f64, |acc, b| acc.max(b * b));
        let mut count = 0usize;
        let mut d = self.diag[0] - x;
        if d.abs() < pivmin {
            d = -pivmin;
        }
        if d < 0.0 {
            count += 1;
        }
        for i in 1..self.dim() {
            d = self.diag[i] - x - self.off[i - 1] * self.off[i - 1] / d;
            if d.abs() < pivmin {
                d = -pivmin;
            }
            if d < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// k-th smallest eigenvalue, 0-indexed.
    pub fn eigenvalue(&self, k: usize) -> f64 {
        assert!(k < self.dim(), "eigenvalue index out of range");
        let (mut lo, mut hi) = self.bounds();
        if lo == hi {
            return lo;
        }
        // 110 halvings drive the interval to the last representable bit.
        for _ in 0..110 {
            let mid = 0.5 * (lo + hi);
            if mid <= lo || mid >= hi {
                break;
            }
            if self.count_below(mid) >= k + 1 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalue(0)
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalue(self.dim() - 1)
    }

    /// All eigenvalues in ascending order. Quadratic in the dimension, fine
    /// for the small projected matrices this is used on.
    #[cfg(test)]
    pub fn eigenvalues(&self) -> Vec<f64> {
        (0..self.dim()).map(|k| self.eigenvalue(k)).collect()
    }

    /// The k largest eigenvalues in descending order.
    pub fn largest_k(&self, k: usize) -> Vec<f64> {
        let m = self.dim();
        let k = k.min(m);
        (0..k).map(|j| self.eigenvalue(m - 1 - j)).collect()
    }
}
