//! Classical product-integration baselines: the fractional Adams
//! predictor-corrector (PECE) scheme and the implicit product trapezoidal rule.
//! Both treat `λ y` as part of the vector field `F(t, y) = f(t) - λ y`.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::solvers::{LinearFdeProblem, Trajectory, TrajectoryMeta};
use crate::specfun::gamma;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaselineMethod {
    Pece,
    PiTrapezoidal,
}

impl fmt::Display for BaselineMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BaselineMethod::Pece => "pece",
            BaselineMethod::PiTrapezoidal => "pi-trapezoidal",
        })
    }
}

impl FromStr for BaselineMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pece" => Ok(Self::Pece),
            "pi-trapezoidal" | "pi-trapez" | "pi_trapezoidal" => Ok(Self::PiTrapezoidal),
            _ => Err(Error::InvalidProblem(format!("unknown baseline method '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaselineConfig {
    pub method: BaselineMethod,
    pub h: f64,
}

impl BaselineConfig {
    pub fn new(method: BaselineMethod, h: f64) -> Result<Self> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::InvalidProblem(format!("step size must be positive, got {h}")));
        }
        Ok(Self { method, h })
    }

    pub fn solve(&self, problem: &LinearFdeProblem) -> Result<Trajectory> {
        match self.method {
            BaselineMethod::Pece => solve_pece(problem, self.h),
            BaselineMethod::PiTrapezoidal => solve_pi_trapezoidal(problem, self.h),
        }
    }
}

/// Taylor polynomial `Σ_k (t - t0)^k / k! · y_{0,k}` carried by the initial data.
fn taylor_term(problem: &LinearFdeProblem, t: f64) -> DVector<f64> {
    let dt = t - problem.t0;
    let mut out = DVector::zeros(problem.dim());
    let mut c = 1.0;
    for (k, y0) in problem.init.iter().enumerate() {
        if k > 0 {
            c *= dt / k as f64;
        }
        out.axpy(c, y0, 1.0);
    }
    out
}

/// `F(t, y) = f(t) - λ y`.
fn vector_field(problem: &LinearFdeProblem, a: &DMatrix<f64>, t: f64, y: &DVector<f64>) -> DVector<f64> {
    let mut out = problem.eval_forcing(t);
    out.gemv(-1.0, a, y, 1.0);
    out
}

/// Product-trapezoidal weight of the history value `F_j` when advancing to
/// step `n` (`j < n`).
fn trapezoid_weight(alpha: f64, j: usize, n: usize) -> f64 {
    let a1 = alpha + 1.0;
    if j == 0 {
        let nm = (n - 1) as f64;
        nm.powf(a1) - (nm - alpha) * (n as f64).powf(alpha)
    } else {
        let d = (n - j) as f64;
        (d + 1.0).powf(a1) + (d - 1.0).powf(a1) - 2.0 * d.powf(a1)
    }
}

fn meta(method: &str, start: Instant) -> TrajectoryMeta {
    TrajectoryMeta {
        method: method.to_string(),
        nodes: None,
        kernel_degree: None,
        wall_seconds: start.elapsed().as_secs_f64(),
    }
}

/// Fractional Adams-Bashforth-Moulton scheme: product-rectangle predictor,
/// product-trapezoidal corrector, one correction per step.
///
/// The method is explicit, so a stiff coefficient can make it blow up. A
/// non-finite state ends the integration: remaining values are NaN and the
/// trajectory is flagged as diverged instead of returning an error.
pub fn solve_pece(problem: &LinearFdeProblem, h: f64) -> Result<Trajectory> {
    problem.validate()?;
    let n = problem.step_count(h)?;
    let start = Instant::now();
    let alpha = problem.alpha;
    let a = problem.coeff.to_matrix();
    let dim = problem.dim();
    let cp = h.powf(alpha) / gamma(alpha + 1.0)?;
    let cc = h.powf(alpha) / gamma(alpha + 2.0)?;

    let mut values = vec![problem.init[0].clone()];
    let mut history = vec![vector_field(problem, &a, problem.t0, &problem.init[0])];
    let mut diverged = false;
    for step in 0..n {
        let t_next = problem.t0 + (step + 1) as f64 * h;
        let base = taylor_term(problem, t_next);
        let nf = step as f64;

        let mut pred = base.clone();
        for (j, fj) in history.iter().enumerate() {
            let d = (step - j) as f64;
            pred.axpy(cp * ((d + 1.0).powf(alpha) - d.powf(alpha)), fj, 1.0);
        }

        let mut corr = base;
        for (j, fj) in history.iter().enumerate() {
            let w = if j == 0 {
                nf.powf(alpha + 1.0) - (nf - alpha) * (nf + 1.0).powf(alpha)
            } else {
                let d = (step - j) as f64;
                (d + 2.0).powf(alpha + 1.0) + d.powf(alpha + 1.0) - 2.0 * (d + 1.0).powf(alpha + 1.0)
            };
            corr.axpy(cc * w, fj, 1.0);
        }
        corr.axpy(cc, &vector_field(problem, &a, t_next, &pred), 1.0);

        if !corr.iter().all(|x| x.is_finite()) {
            diverged = true;
            values.resize(n + 1, DVector::from_element(dim, f64::NAN));
            break;
        }
        history.push(vector_field(problem, &a, t_next, &corr));
        values.push(corr);
    }
    Ok(Trajectory { h, t0: problem.t0, values, meta: meta("pece", start), diverged })
}

/// Implicit product-integration trapezoidal rule. Every step solves
/// `(I + h^α/Γ(α+2) λ) y_n = known terms` with a single LU factorization
/// shared by all steps.
pub fn solve_pi_trapezoidal(problem: &LinearFdeProblem, h: f64) -> Result<Trajectory> {
    problem.validate()?;
    let n = problem.step_count(h)?;
    let start = Instant::now();
    let alpha = problem.alpha;
    let a = problem.coeff.to_matrix();
    let dim = problem.dim();
    let c = h.powf(alpha) / gamma(alpha + 2.0)?;
    let lu = (DMatrix::identity(dim, dim) + &a * c).lu();
    if !lu.is_invertible() {
        return Err(Error::SingularImplicitStep);
    }

    let mut values = vec![problem.init[0].clone()];
    let mut history = vec![vector_field(problem, &a, problem.t0, &problem.init[0])];
    for step in 1..=n {
        let t = problem.t0 + step as f64 * h;
        let mut rhs = taylor_term(problem, t);
        for (j, fj) in history.iter().enumerate() {
            rhs.axpy(c * trapezoid_weight(alpha, j, step), fj, 1.0);
        }
        rhs.axpy(c, &problem.eval_forcing(t), 1.0);
        let y = lu.solve(&rhs).ok_or(Error::SingularImplicitStep)?;
        if !y.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFiniteState { step });
        }
        history.push(vector_field(problem, &a, t, &y));
        values.push(y);
    }
    Ok(Trajectory { h, t0: problem.t0, values, meta: meta("pi-trapezoidal", start), diverged: false })
}
