//! Small linear-algebra helpers shared by the scalar and matrix code paths.

use nalgebra::DMatrix;
use num_complex::Complex64;

/// A value that can appear in a moment vector: a scalar weight or an `M×M`
/// matrix weight. The Vandermonde elimination and the kernel recombination
/// only need `y += a·x` and `y *= s`.
pub trait MomentValue: Clone {
    fn zero_like(&self) -> Self;
    /// `self += a * x`
    fn axpy(&mut self, a: f64, x: &Self);
    fn scale(&mut self, s: f64);
    /// Largest absolute entry.
    fn max_abs(&self) -> f64;
}

impl MomentValue for f64 {
    fn zero_like(&self) -> Self {
        0.0
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += a * x;
    }
    fn scale(&mut self, s: f64) {
        *self *= s;
    }
    fn max_abs(&self) -> f64 {
        self.abs()
    }
}

impl MomentValue for Complex64 {
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        *self += a * x;
    }
    fn scale(&mut self, s: f64) {
        *self *= s;
    }
    fn max_abs(&self) -> f64 {
        self.norm()
    }
}

impl MomentValue for DMatrix<f64> {
    fn zero_like(&self) -> Self {
        DMatrix::zeros(self.nrows(), self.ncols())
    }
    fn axpy(&mut self, a: f64, x: &Self) {
        self.zip_apply(x, |y, xv| *y += a * xv);
    }
    fn scale(&mut self, s: f64) {
        *self *= s;
    }
    fn max_abs(&self) -> f64 {
        self.amax()
    }
}

/// Operator ∞-norm (maximum absolute row sum).
pub fn inf_norm(m: &DMatrix<f64>) -> f64 {
    m.row_iter().map(|r| r.iter().map(|x| x.abs()).sum::<f64>()).fold(0.0, f64::max)
}

/// Inverse of `shift·I + scale·W` for a real square `W`.
pub(crate) fn shifted_inverse(w: &DMatrix<f64>, shift: Complex64, scale: f64) -> Option<DMatrix<Complex64>> {
    let n = w.nrows();
    let mut a = DMatrix::<Complex64>::from_fn(n, n, |i, j| Complex64::new(scale * w[(i, j)], 0.0));
    for i in 0..n {
        a[(i, i)] += shift;
    }
    a.lu().try_inverse()
}
