//! Rational approximation of the exponential on the negative real axis and
//! the partial-fraction evaluation of generalized Mittag-Leffler kernels and
//! of the moment kernels `R̂_{α,k}(j; w)` that drive the quadrature weights.

mod cf_table;
mod matrix;
mod moments;
pub mod oracle;
mod rational;
mod scalar;

pub use matrix::{gml_pf_matrix, r_hat_matrix, MatrixKernel, MatrixMoments};
pub use moments::{GL_POINTS, ORIGIN_LEVELS};
pub use oracle::r_hat_oracle;
pub use rational::{RationalApproximation, MAX_DEGREE, MIN_DEGREE};
pub use scalar::{
    gml_pf, gml_pf_real, r_hat, r_hat_by_combination, r_hat_complex, ScalarKernel, ScalarMoments, POLE_CORRECTION_MIN,
};

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Denominators below this magnitude signal a coefficient outside the
/// admissible spectrum.
pub const DENOMINATOR_FLOOR: f64 = 1e-300;

/// Builds the approximation of degree `n` (`2 <= n <= 16`).
pub fn build_rational_approx(n: usize) -> Result<RationalApproximation> {
    RationalApproximation::new(n)
}

/// Arguments of a moment kernel `R̂_{α,k}(j; w)`: lag `j >= 1` (in steps),
/// moment order `k`, fractional order `α` and the scaled coefficient `w = h^α λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct KernelRequest<W> {
    pub j: usize,
    pub k: usize,
    pub alpha: f64,
    pub w: W,
}

impl<W> KernelRequest<W> {
    pub fn validate(&self) -> Result<()> {
        if self.j < 1 {
            return Err(Error::Domain("kernel lag must be >= 1".into()));
        }
        if !(self.alpha > 0.0) {
            return Err(Error::Domain(format!("alpha must be positive, got {}", self.alpha)));
        }
        Ok(())
    }
}

/// Kernel values `R̂_{α,k}(j; w)` for `j = 1..=lags`, `k = 0..moments`, as CSV
/// rows `j,k,re,im`.
pub fn kernels_csv(alpha: f64, w: f64, lags: usize, moments: usize, rat: &RationalApproximation) -> Result<String> {
    let mut out = String::from("j,k,re,im\n");
    for j in 1..=lags {
        for k in 0..moments {
            let v = r_hat_complex(&KernelRequest { j, k, alpha, w: num_complex::Complex64::new(w, 0.0) }, rat)?;
            let _ = writeln!(out, "{j},{k},{:.15e},{:.15e}", v.re, v.im);
        }
    }
    Ok(out)
}
