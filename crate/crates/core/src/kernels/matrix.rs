use nalgebra::DMatrix;
use num_complex::Complex64;

use super::moments::{moments_by_quadrature, MomentRule};
use super::scalar::{moment_betas, origin_value, pole_correction, ScalarMoments};
use super::{KernelRequest, RationalApproximation};
use crate::error::{Error, Result};
use crate::linalg::{inf_norm, shifted_inverse};

/// Matrix analogue of [`super::ScalarKernel`]: evaluates `e_{α,β_i}(t; W)` for
/// a real square `W` whose spectrum lies on the non-negative real axis.
///
/// Every partial-fraction term needs `(τ_k^α I + t^α W)^{-1}`; one LU
/// factorization per conjugate-halved pole and time offset is shared by all
/// `β_i`.
///
/// For `α > 1` the transform poles off the negative real axis are corrected
/// through the eigendecomposition of `W` when `W` is symmetric. A
/// non-symmetric `W` with `α > 1` gets the plain partial-fraction sum.
pub struct MatrixKernel {
    alpha: f64,
    w: DMatrix<f64>,
    betas: Vec<f64>,
    terms: Vec<(Complex64, Vec<Complex64>)>,
    /// eigenvalues and eigenvectors of a symmetric `W`, kept when `α > 1`
    spectral: Option<(Vec<f64>, DMatrix<f64>)>,
    rat: RationalApproximation,
}

fn symmetric_spectrum(w: &DMatrix<f64>) -> Option<(Vec<f64>, DMatrix<f64>)> {
    let asym = (w - w.transpose()).amax();
    if asym > 1e-14 * w.amax() {
        return None;
    }
    let eig = w.clone().symmetric_eigen();
    Some((eig.eigenvalues.iter().copied().collect(), eig.eigenvectors))
}

impl MatrixKernel {
    pub fn new(alpha: f64, w: &DMatrix<f64>, betas: &[f64], rat: &RationalApproximation) -> Result<Self> {
        if !w.is_square() || w.nrows() == 0 {
            return Err(Error::Domain(format!(
                "coefficient matrix must be square and non-empty, got {}x{}",
                w.nrows(),
                w.ncols()
            )));
        }
        if !(alpha > 0.0) || betas.iter().any(|b| !(*b > 0.0)) {
            return Err(Error::Domain("alpha and every beta must be positive".into()));
        }
        let terms = rat
            .half_terms()
            .map(|t| {
                let coefs = betas.iter().map(|&b| t.residue * t.pole.powf(alpha - b) * t.weight).collect();
                (t.pole.powf(alpha), coefs)
            })
            .collect();
        let spectral = if alpha > 1.0 { symmetric_spectrum(w) } else { None };
        Ok(Self { alpha, w: w.clone(), betas: betas.to_vec(), terms, spectral, rat: rat.clone() })
    }

    pub fn dim(&self) -> usize {
        self.w.nrows()
    }

    /// `e_{α,β_i}(t; W)` for every configured `β_i`. `lag` is only used to
    /// label a singular solve.
    pub fn eval(&self, t: f64, lag: usize) -> Result<Vec<DMatrix<f64>>> {
        let m = self.dim();
        if t == 0.0 {
            return self.betas.iter().map(|&b| origin_value(b).map(|v| DMatrix::identity(m, m) * v)).collect();
        }
        if !(t > 0.0) || !t.is_finite() {
            return Err(Error::Domain(format!("time offset must be finite and >= 0, got {t}")));
        }
        let scale = t.powf(self.alpha);
        let mut acc = vec![DMatrix::<f64>::zeros(m, m); self.betas.len()];
        for (k, (pa, coefs)) in self.terms.iter().enumerate() {
            let inv = shifted_inverse(&self.w, *pa, scale).ok_or(Error::SingularSolve { pole: k, lag })?;
            for (a, c) in acc.iter_mut().zip(coefs) {
                a.zip_apply(&inv, |x, g| *x += (c * g).re);
            }
        }
        if let Some((lams, q)) = &self.spectral {
            for (i, &l) in lams.iter().enumerate() {
                if !(l > 0.0) {
                    continue;
                }
                let corr = pole_correction(self.alpha, &self.betas, Complex64::new(scale * l, 0.0), &self.rat);
                let qi = q.column(i);
                let outer = &qi * qi.transpose();
                for (a, c) in acc.iter_mut().zip(corr) {
                    *a -= &outer * c.re;
                }
            }
        }
        for (a, &b) in acc.iter_mut().zip(&self.betas) {
            *a *= -t.powf(b - 1.0);
        }
        Ok(acc)
    }
}

/// Matrix generalized Mittag-Leffler function `e_{α,β}(t; W)`.
pub fn gml_pf_matrix(
    alpha: f64,
    beta: f64,
    t: f64,
    w: &DMatrix<f64>,
    rat: &RationalApproximation,
) -> Result<DMatrix<f64>> {
    let kernel = MatrixKernel::new(alpha, w, &[beta], rat)?;
    Ok(kernel.eval(t, 0)?.remove(0))
}

/// Matrix analogue of [`super::ScalarMoments`].
///
/// A symmetric `W = Q Λ Q^T` is handled through its eigenvalues: the moments
/// are `Q diag(R̂_k(j; λ_i)) Q^T`, which is the same rational function of `W`
/// at a fraction of the cost of shifted solves. Other matrices integrate the
/// matrix-valued kernel directly.
pub struct MatrixMoments {
    count: usize,
    backend: Backend,
}

enum Backend {
    Spectral { q: DMatrix<f64>, modes: Vec<ScalarMoments> },
    Direct { kernel: MatrixKernel, tail: MatrixKernel, rule: MomentRule },
}

impl MatrixMoments {
    pub fn new(alpha: f64, w: &DMatrix<f64>, count: usize, rat: &RationalApproximation) -> Result<Self> {
        let backend = match symmetric_spectrum(w) {
            Some((lams, q)) => {
                let modes = lams.iter().map(|&l| ScalarMoments::new(alpha, l, count, rat)).collect::<Result<_>>()?;
                Backend::Spectral { q, modes }
            }
            None => {
                let kernel = MatrixKernel::new(alpha, w, &[alpha], rat)?;
                let tail = MatrixKernel::new(alpha, w, &moment_betas(alpha, count), rat)?;
                // the operator norm bounds every eigenvalue
                let rule = MomentRule::new(alpha, inf_norm(w).powf(1.0 / alpha));
                Backend::Direct { kernel, tail, rule }
            }
        };
        Ok(Self { count, backend })
    }

    pub fn eval(&mut self, j: usize) -> Result<Vec<DMatrix<f64>>> {
        if j == 0 {
            return Err(Error::Domain("kernel lag must be >= 1".into()));
        }
        match &mut self.backend {
            Backend::Spectral { q, modes } => {
                let per_mode = modes.iter_mut().map(|m| m.eval(j)).collect::<Result<Vec<_>>>()?;
                Ok((0..self.count)
                    .map(|k| {
                        let mut scaled = q.clone();
                        for (mut col, vals) in scaled.column_iter_mut().zip(&per_mode) {
                            col *= vals[k];
                        }
                        scaled * q.transpose()
                    })
                    .collect())
            }
            Backend::Direct { kernel, tail, rule } => moments_by_quadrature(
                j,
                self.count,
                rule,
                |t| Ok(kernel.eval(t, j)?.remove(0)),
                |eps| tail.eval(eps, j),
            ),
        }
    }
}

/// `R̂_{α,k}(j; W)`, the matrix form of [`super::r_hat`].
pub fn r_hat_matrix(req: &KernelRequest<DMatrix<f64>>, rat: &RationalApproximation) -> Result<DMatrix<f64>> {
    req.validate()?;
    Ok(MatrixMoments::new(req.alpha, &req.w, req.k + 1, rat)?.eval(req.j)?.remove(req.k))
}
