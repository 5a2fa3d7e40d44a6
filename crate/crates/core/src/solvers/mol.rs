use std::f64::consts::PI;

use nalgebra::{DMatrix, DVector};

use super::problem::{initial_condition_count, LinearFdeProblem};
use crate::error::{Error, Result};
use crate::specfun::gamma;

/// Interior grid `x_j = j Δx`, `j = 1..M`, `Δx = 1/(M+1)`.
pub fn mol_grid(m: usize) -> Vec<f64> {
    let dx = 1.0 / (m as f64 + 1.0);
    (1..=m).map(|j| j as f64 * dx).collect()
}

/// `tridiag(-1, 2, -1) / Δx²` of size `M`.
pub fn laplacian_1d(m: usize) -> DMatrix<f64> {
    let dx = 1.0 / (m as f64 + 1.0);
    let s = 1.0 / (dx * dx);
    DMatrix::from_fn(m, m, |i, j| match i.abs_diff(j) {
        0 => 2.0 * s,
        1 => -s,
        _ => 0.0,
    })
}

/// Eigenvalue of [`laplacian_1d`] on the vector `sin(π x_j)`.
pub fn mol_first_eigenvalue(m: usize) -> f64 {
    let dx = 1.0 / (m as f64 + 1.0);
    (2.0 - 2.0 * (PI * dx).cos()) / (dx * dx)
}

/// Method-of-lines semidiscretization of `D_t^α u = u_xx + t^p/Γ(p+1) sin(πx)`
/// on `(0,1)` with homogeneous Dirichlet data and `u(0,x) = sin(πx)`, on
/// `t ∈ [0, 1]`. For `α > 1` the initial velocity is zero.
pub fn mol_discretize(m: usize, p: f64, alpha: f64) -> Result<LinearFdeProblem> {
    if m < 2 {
        return Err(Error::InvalidProblem(format!("need at least 2 interior points, got {m}")));
    }
    let profile = DVector::from_iterator(m, mol_grid(m).into_iter().map(|x| (PI * x).sin()));
    let g = gamma(p + 1.0)?;
    let mut init = vec![profile.clone()];
    init.resize(initial_condition_count(alpha), DVector::zeros(m));
    LinearFdeProblem::matrix(alpha, laplacian_1d(m), 0.0, 1.0, init, move |t, out| {
        let s = t.powf(p) / g;
        for (o, v) in out.iter_mut().zip(profile.iter()) {
            *o = s * v;
        }
    })
}
