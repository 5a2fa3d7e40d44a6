//! Property checks shared by the proptest suite and the acceptance runner.
#![allow(dead_code)]

use expquad::kernels::RationalApproximation;
use expquad::quadrature::{vandermonde_residual, vandermonde_solve, NodeSet};
use expquad::solvers::{solve_exponential_cq, LinearFdeProblem};
use expquad::specfun::gml_real;
use nalgebra::{DMatrix, DVector};
use proptest::prelude::*;
use proptest::test_runner::TestCaseError;

pub fn rat() -> &'static RationalApproximation {
    RationalApproximation::shared(15).unwrap()
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(msg()))
    }
}

fn solver_err(e: expquad::Error) -> TestCaseError {
    TestCaseError::fail(e.to_string())
}

/// `(α, β, t, λ, h)` with `α <= 1`, where `e_{α,β}` keeps one sign.
pub fn scaling_args() -> impl Strategy<Value = (f64, f64, f64, f64, f64)> {
    (0.2f64..=1.0, 0.0f64..=2.5, 0.05f64..4.0, 0.0f64..6.0, 0.1f64..3.0)
        .prop_map(|(a, db, t, l, h)| (a, a + db, t, l, h))
}

/// `e_{α,β}(t; λ) = h^{β-1} e_{α,β}(t/h; h^α λ)`.
pub fn scaling_identity((alpha, beta, t, lam, h): (f64, f64, f64, f64, f64)) -> Result<(), TestCaseError> {
    let lhs = gml_real(alpha, beta, t, lam).map_err(solver_err)?;
    let rhs = h.powf(beta - 1.0) * gml_real(alpha, beta, t / h, h.powf(alpha) * lam).map_err(solver_err)?;
    check((lhs - rhs).abs() <= 1e-11 * lhs.abs().max(rhs.abs()), || {
        format!("alpha={alpha} beta={beta} t={t} lam={lam} h={h}: {lhs} vs {rhs}")
    })
}

pub fn scalar_problem_args() -> impl Strategy<Value = (f64, f64, f64, f64)> {
    // α, λ, y0, forcing frequency
    (0.3f64..1.9, 0.0f64..8.0, -2.0f64..2.0, 0.0f64..3.0)
}

fn scalar_problem(alpha: f64, lam: f64, y0: f64, freq: f64, amp: f64) -> LinearFdeProblem {
    let mut init = vec![y0];
    if alpha > 1.0 {
        init.push(0.5 * y0);
    }
    LinearFdeProblem::scalar(alpha, lam, 0.0, 1.0, &init, move |t| amp * (freq * t).cos() + t).unwrap()
}

/// A 1×1 matrix problem follows the scalar trajectory.
pub fn matrix_scalar_equivalence((alpha, lam, y0, freq): (f64, f64, f64, f64)) -> Result<(), TestCaseError> {
    let nodes = NodeSet::optimal(2).unwrap();
    let h = 1.0 / 16.0;
    let scalar = scalar_problem(alpha, lam, y0, freq, 1.0);
    let matrix = LinearFdeProblem::matrix(
        alpha,
        DMatrix::from_element(1, 1, lam),
        0.0,
        1.0,
        scalar.init.clone(),
        move |t, out| out[0] = (freq * t).cos() + t,
    )
    .map_err(solver_err)?;
    let a = solve_exponential_cq(&scalar, &nodes, h, rat()).map_err(solver_err)?;
    let b = solve_exponential_cq(&matrix, &nodes, h, rat()).map_err(solver_err)?;
    let diff = a.values.iter().zip(&b.values).map(|(x, y)| (x[0] - y[0]).abs()).fold(0.0, f64::max);
    check(diff <= 1e-13, || format!("max difference {diff:e}"))
}

/// Solutions of `f1 + f2` with initial data `y1 + y2` add up.
pub fn superposition((alpha, lam, y0, freq): (f64, f64, f64, f64)) -> Result<(), TestCaseError> {
    let nodes = NodeSet::optimal(3).unwrap();
    let h = 1.0 / 16.0;
    let p1 = scalar_problem(alpha, lam, y0, freq, 1.0);
    let p2 = LinearFdeProblem::scalar(alpha, lam, 0.0, 1.0, &vec![0.0; p1.init.len()], |t| (2.0 * t).sin()).unwrap();
    let both = {
        let init: Vec<f64> = p1.init.iter().map(|v| v[0]).collect();
        LinearFdeProblem::scalar(alpha, lam, 0.0, 1.0, &init, move |t| (freq * t).cos() + t + (2.0 * t).sin()).unwrap()
    };
    let s1 = solve_exponential_cq(&p1, &nodes, h, rat()).map_err(solver_err)?;
    let s2 = solve_exponential_cq(&p2, &nodes, h, rat()).map_err(solver_err)?;
    let s = solve_exponential_cq(&both, &nodes, h, rat()).map_err(solver_err)?;
    let mut worst = 0.0f64;
    for ((a, b), c) in s1.values.iter().zip(&s2.values).zip(&s.values) {
        let scale = a[0].abs() + b[0].abs() + 1.0;
        worst = worst.max((a[0] + b[0] - c[0]).abs() / scale);
    }
    check(worst <= 1e-12, || format!("superposition defect {worst:e}"))
}

/// Entries of a symmetric positive semidefinite 3×3 coefficient.
pub fn symmetric_args() -> impl Strategy<Value = (f64, Vec<f64>)> {
    (0.3f64..1.9, prop::collection::vec(-2.0f64..2.0, 9))
}

/// The matrix solver agrees with scalar solves in the eigenbasis.
pub fn diagonalization_equivalence((alpha, entries): (f64, Vec<f64>)) -> Result<(), TestCaseError> {
    let b = DMatrix::from_row_slice(3, 3, &entries);
    let a = &b * b.transpose();
    let eig = a.clone().symmetric_eigen();
    let q = eig.eigenvectors.clone();
    let y0 = DVector::from_row_slice(&[1.0, -0.5, 0.25]);
    let dir = DVector::from_row_slice(&[0.3, 1.0, -0.7]);
    let m = if alpha > 1.0 { 2 } else { 1 };
    let init = vec![y0.clone(); m];
    let d = dir.clone();
    let system = LinearFdeProblem::matrix(alpha, a.clone(), 0.0, 1.0, init, move |t, out| {
        for (o, v) in out.iter_mut().zip(d.iter()) {
            *o = v * (1.0 + t * t);
        }
    })
    .map_err(solver_err)?;
    let nodes = NodeSet::optimal(2).unwrap();
    let h = 1.0 / 16.0;
    let full = solve_exponential_cq(&system, &nodes, h, rat()).map_err(solver_err)?;
    let y0_modal = q.transpose() * &y0;
    let dir_modal = q.transpose() * &dir;
    let mut modal = Vec::new();
    for i in 0..3 {
        let g = dir_modal[i];
        let p =
            LinearFdeProblem::scalar(alpha, eig.eigenvalues[i].max(0.0), 0.0, 1.0, &vec![y0_modal[i]; m], move |t| {
                g * (1.0 + t * t)
            })
            .map_err(solver_err)?;
        modal.push(solve_exponential_cq(&p, &nodes, h, rat()).map_err(solver_err)?);
    }
    let mut worst = 0.0f64;
    for (n, v) in full.values.iter().enumerate() {
        let z = DVector::from_iterator(3, modal.iter().map(|tr| tr.values[n][0]));
        worst = worst.max((&q * z - v).amax());
    }
    check(worst <= 1e-9, || format!("eigenbasis defect {worst:e}"))
}

/// Distinct nodes spread over `[0, 1]` and a right-hand side.
pub fn vandermonde_args() -> impl Strategy<Value = (Vec<f64>, Vec<f64>)> {
    (1usize..=4).prop_flat_map(|nu| {
        (
            prop::collection::vec(0.0f64..1.0, nu).prop_filter("well separated", |c| {
                c.iter().enumerate().all(|(i, a)| c[i + 1..].iter().all(|b| (a - b).abs() > 0.05))
            }),
            prop::collection::vec(-1.0f64..1.0, nu),
        )
    })
}

/// Björck-Pereyra solutions reproduce the moments they were built from.
pub fn vandermonde_roundtrip((c, rhs): (Vec<f64>, Vec<f64>)) -> Result<(), TestCaseError> {
    let nodes = NodeSet::new(c).map_err(solver_err)?;
    let x = vandermonde_solve(&nodes, &rhs).map_err(solver_err)?;
    let scale = x.iter().map(|v| v.abs()).fold(1.0, f64::max);
    let res = vandermonde_residual(&nodes, &x, &rhs);
    check(res <= 1e-12 * scale, || format!("residual {res:e} (solution scale {scale:e})"))
}
