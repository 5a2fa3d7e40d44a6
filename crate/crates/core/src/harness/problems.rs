use std::fmt;

use nalgebra::DVector;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::RationalApproximation;
use crate::quadrature::NodeSet;
use crate::solvers::{
    initial_condition_count, mol_discretize, mol_first_eigenvalue, mol_grid, solve_exponential_cq, LinearFdeProblem,
    Trajectory,
};
use crate::specfun::{gamma, gml_real};

pub const DEFAULT_LAMBDA: f64 = 3.0;
pub const DEFAULT_Y0: f64 = 1.0;
/// Step size of the fine-grid reference for problems without closed form.
pub const REFERENCE_STEP: f64 = 1.0 / 4096.0;

/// Benchmark problems on `[0, 1]`.
///
/// * `T1`: `f(t) = t^{p-α}/Γ(p+1-α)`, `y(0) = 1`, exact solution known.
/// * `T2`: `f(t) = sin t + 3 cos t`, `y(0) = 1`, fine-grid reference.
/// * `Pde`: method-of-lines system for the time-fractional heat equation
///   with `M` interior points.
///
/// For `α > 1` the initial velocity is zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TestProblem {
    T1 { alpha: f64, lambda: f64, p: f64 },
    T2 { alpha: f64, lambda: f64 },
    Pde { alpha: f64, p: f64, m: usize },
}

impl fmt::Display for TestProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TestProblem::T1 { alpha, lambda, p } => write!(f, "T1(alpha={alpha}, lambda={lambda}, p={p})"),
            TestProblem::T2 { alpha, lambda } => write!(f, "T2(alpha={alpha}, lambda={lambda})"),
            TestProblem::Pde { alpha, p, m } => write!(f, "PDE(alpha={alpha}, p={p}, M={m})"),
        }
    }
}

/// Reference value at the final time together with a description of how it
/// was obtained.
#[derive(Debug, Clone, PartialEq)]
pub struct Reference {
    pub value: DVector<f64>,
    pub descriptor: String,
}

fn scalar_init(alpha: f64) -> Vec<f64> {
    let mut init = vec![DEFAULT_Y0];
    init.resize(initial_condition_count(alpha), 0.0);
    init
}

impl TestProblem {
    pub fn t1(alpha: f64, p: f64) -> Self {
        TestProblem::T1 { alpha, lambda: DEFAULT_LAMBDA, p }
    }

    pub fn t2(alpha: f64) -> Self {
        TestProblem::T2 { alpha, lambda: DEFAULT_LAMBDA }
    }

    pub fn pde(alpha: f64, p: f64, m: usize) -> Self {
        TestProblem::Pde { alpha, p, m }
    }

    pub fn alpha(&self) -> f64 {
        match *self {
            TestProblem::T1 { alpha, .. } | TestProblem::T2 { alpha, .. } | TestProblem::Pde { alpha, .. } => alpha,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if let TestProblem::T1 { alpha, p, .. } = *self {
            let bound = alpha.ceil() - 1.0;
            if !(p > bound) {
                return Err(Error::InvalidProblem(format!("T1 needs p > ceil(alpha) - 1 = {bound}, got p = {p}")));
            }
        }
        Ok(())
    }

    pub fn build(&self) -> Result<LinearFdeProblem> {
        self.validate()?;
        match *self {
            TestProblem::T1 { alpha, lambda, p } => {
                let g = gamma(p + 1.0 - alpha)?;
                LinearFdeProblem::scalar(alpha, lambda, 0.0, 1.0, &scalar_init(alpha), move |t| t.powf(p - alpha) / g)
            }
            TestProblem::T2 { alpha, lambda } => {
                LinearFdeProblem::scalar(alpha, lambda, 0.0, 1.0, &scalar_init(alpha), |t| t.sin() + 3.0 * t.cos())
            }
            TestProblem::Pde { alpha, p, m } => mol_discretize(m, p, alpha),
        }
    }

    /// Reference solution at `t = 1`: closed form for `T1` and `Pde`, a
    /// fine-grid run for `T2`.
    pub fn reference(&self) -> Result<Reference> {
        self.validate()?;
        match *self {
            TestProblem::T1 { alpha, lambda, p } => Ok(Reference {
                value: DVector::from_element(1, exact_t1(1.0, alpha, lambda, p, DEFAULT_Y0)?),
                descriptor: "closed form".into(),
            }),
            TestProblem::T2 { .. } => {
                let tr = reference_fine_grid(&self.build()?, REFERENCE_STEP, RationalApproximation::shared(15)?)?;
                Ok(Reference {
                    value: tr.last().clone(),
                    descriptor: format!(
                        "exponential CQ, nodes {{0, 1/4, 7/10, 1}}, h = 1/{}",
                        (1.0 / REFERENCE_STEP).round()
                    ),
                })
            }
            TestProblem::Pde { alpha, p, m } => Ok(Reference {
                value: exact_pde_semidiscrete(1.0, alpha, p, m)?,
                descriptor: "semidiscrete eigenvector solution".into(),
            }),
        }
    }
}

/// Exact solution of `T1` (with `t0 = 0`):
/// `y(t) = E_{α,1}(-t^α λ) y0 + t^p E_{α,p+1}(-t^α λ)`.
pub fn exact_t1(t: f64, alpha: f64, lam: f64, p: f64, y0: f64) -> Result<f64> {
    Ok(gml_real(alpha, 1.0, t, lam)? * y0 + gml_real(alpha, p + 1.0, t, lam)?)
}

/// Exact solution of the method-of-lines system:
/// `U_j(t) = sin(π x_j) (e_{α,1}(t; μ) + e_{α,p+α+1}(t; μ))`, where `μ` is the
/// eigenvalue of the discrete Laplacian belonging to `sin(π x_j)`.
pub fn exact_pde_semidiscrete(t: f64, alpha: f64, p: f64, m: usize) -> Result<DVector<f64>> {
    let mu = mol_first_eigenvalue(m);
    let amp = gml_real(alpha, 1.0, t, mu)? + gml_real(alpha, p + alpha + 1.0, t, mu)?;
    Ok(DVector::from_iterator(m, mol_grid(m).into_iter().map(|x| amp * (std::f64::consts::PI * x).sin())))
}

/// Exponential CQ run with the four optimal nodes `{0, 1/4, 7/10, 1}` on a
/// fine grid.
pub fn reference_fine_grid(problem: &LinearFdeProblem, h_ref: f64, rat: &RationalApproximation) -> Result<Trajectory> {
    if !(h_ref <= 1.0 / 1024.0) {
        return Err(Error::InvalidProblem(format!("reference step must not exceed 1/1024, got {h_ref}")));
    }
    solve_exponential_cq(problem, &NodeSet::optimal(4)?, h_ref, rat)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_t1_at_origin_and_classical_limit() {
        assert!((exact_t1(0.0, 0.5, 3.0, 2.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        for t in [0.25, 0.5, 1.0] {
            let y = exact_t1(t, 1.0, 0.0, 2.0, 1.0).unwrap();
            assert!((y - (1.0 + t * t / 2.0)).abs() < 1e-14);
        }
    }

    #[test]
    fn pde_reference_starts_at_initial_profile() {
        let u = exact_pde_semidiscrete(0.0, 0.6, 3.0, 16).unwrap();
        for (ui, x) in u.iter().zip(mol_grid(16)) {
            assert!((ui - (std::f64::consts::PI * x).sin()).abs() < 1e-15);
        }
    }

    #[test]
    fn t1_constraint() {
        assert!(TestProblem::t1(1.5, 0.5).validate().is_err());
        assert!(TestProblem::t1(1.5, 1.5).validate().is_ok());
        assert!(TestProblem::t1(0.5, 0.0).validate().is_err());
    }

    #[test]
    fn serde_tagging() {
        let p = TestProblem::pde(0.8, 3.0, 8);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"kind":"pde","alpha":0.8,"p":3.0,"m":8}"#);
        assert_eq!(serde_json::from_str::<TestProblem>(&s).unwrap(), p);
    }
}
