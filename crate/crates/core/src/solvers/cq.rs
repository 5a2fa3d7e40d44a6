use std::collections::HashMap;
use std::time::Instant;

use nalgebra::{DMatrix, DVector};

use super::problem::{initial_condition_count, Coefficient, LinearFdeProblem, Trajectory, TrajectoryMeta};
use crate::error::{Error, Result};
use crate::kernels::RationalApproximation;
use crate::quadrature::{build_matrix_with_homogeneous, build_scalar_with_homogeneous, NodeSet};

/// Forcing samples `f(t0 + (j + c_r) h)` for `j < n`, `F[j][r]`. Coinciding
/// times (`c_ν = 1` at step `j` and `c_1 = 0` at step `j + 1`) are evaluated
/// once.
fn sample_forcing(problem: &LinearFdeProblem, nodes: &NodeSet, h: f64, n: usize) -> Vec<Vec<DVector<f64>>> {
    let mut cache: HashMap<u64, DVector<f64>> = HashMap::new();
    (0..n)
        .map(|j| {
            nodes
                .nodes()
                .iter()
                .map(|&c| {
                    let t = problem.t0 + (j as f64 + c) * h;
                    cache.entry(t.to_bits()).or_insert_with(|| problem.eval_forcing(t)).clone()
                })
                .collect()
        })
        .collect()
}

fn check_finite(v: &DVector<f64>, step: usize) -> Result<()> {
    if v.iter().all(|x| x.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteState { step })
    }
}

/// Exponential convolution quadrature on the mesh `t_n = t0 + n h`:
///
/// `y_n = Σ_k h^k e_{α,k+1}(n; h^α λ) y_{0,k} + Σ_{j<n} Σ_r b_r(n-j) f(t_j + c_r h)`.
///
/// The weights and homogeneous kernels are precomputed for all lags; the
/// convolution is summed directly in `O(n² ν)`.
pub fn solve_exponential_cq(
    problem: &LinearFdeProblem,
    nodes: &NodeSet,
    h: f64,
    rat: &RationalApproximation,
) -> Result<Trajectory> {
    problem.validate()?;
    let n = problem.step_count(h)?;
    let start = Instant::now();
    let m = initial_condition_count(problem.alpha);
    let forcing = sample_forcing(problem, nodes, h, n);
    let values = match &problem.coeff {
        Coefficient::Scalar(lambda) => scalar_steps(problem, *lambda, nodes, h, n, m, rat, &forcing)?,
        Coefficient::Matrix(a) => matrix_steps(problem, a, nodes, h, n, m, rat, &forcing)?,
    };
    Ok(Trajectory {
        h,
        t0: problem.t0,
        values,
        meta: TrajectoryMeta {
            method: format!("exponential-cq nu={}", nodes.nu()),
            nodes: Some(nodes.nodes().to_vec()),
            kernel_degree: Some(rat.degree()),
            wall_seconds: start.elapsed().as_secs_f64(),
        },
        diverged: false,
    })
}

#[allow(clippy::too_many_arguments)]
fn scalar_steps(
    problem: &LinearFdeProblem,
    lambda: f64,
    nodes: &NodeSet,
    h: f64,
    n: usize,
    m: usize,
    rat: &RationalApproximation,
    forcing: &[Vec<DVector<f64>>],
) -> Result<Vec<DVector<f64>>> {
    let pre = build_scalar_with_homogeneous(problem.alpha, lambda, h, n, nodes, rat, m)?;
    let table = &pre.table;
    let y0: Vec<f64> = problem.init.iter().map(|v| v[0]).collect();
    let f: Vec<Vec<f64>> = forcing.iter().map(|row| row.iter().map(|v| v[0]).collect()).collect();
    let mut values = Vec::with_capacity(n + 1);
    values.push(DVector::from_element(1, y0[0]));
    for step in 1..=n {
        let mut y: f64 = (0..m).map(|k| h.powi(k as i32) * pre.homogeneous[step][k] * y0[k]).sum();
        for (j, fj) in f.iter().enumerate().take(step) {
            let b = table.scalar(step - j).expect("lag within table");
            y += b.iter().zip(fj).map(|(br, fr)| br * fr).sum::<f64>();
        }
        let y = DVector::from_element(1, y);
        check_finite(&y, step)?;
        values.push(y);
    }
    Ok(values)
}

#[allow(clippy::too_many_arguments)]
fn matrix_steps(
    problem: &LinearFdeProblem,
    a: &DMatrix<f64>,
    nodes: &NodeSet,
    h: f64,
    n: usize,
    m: usize,
    rat: &RationalApproximation,
    forcing: &[Vec<DVector<f64>>],
) -> Result<Vec<DVector<f64>>> {
    let pre = build_matrix_with_homogeneous(problem.alpha, a, h, n, nodes, rat, m)?;
    let table = &pre.table;
    let dim = a.nrows();
    let mut values = Vec::with_capacity(n + 1);
    values.push(problem.init[0].clone());
    for step in 1..=n {
        let mut y = DVector::zeros(dim);
        for k in 0..m {
            y.gemv(h.powi(k as i32), &pre.homogeneous[step][k], &problem.init[k], 1.0);
        }
        for (j, fj) in forcing.iter().enumerate().take(step) {
            let b = table.matrix(step - j).expect("lag within table");
            for (br, fr) in b.iter().zip(fj) {
                y.gemv(1.0, br, fr, 1.0);
            }
        }
        check_finite(&y, step)?;
        values.push(y);
    }
    Ok(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gml_real;

    fn rat15() -> &'static RationalApproximation {
        RationalApproximation::shared(15).unwrap()
    }

    #[test]
    fn homogeneous_problem_follows_the_kernel() {
        let (alpha, lambda) = (0.6, 2.0);
        let p = LinearFdeProblem::scalar(alpha, lambda, 0.0, 2.0, &[1.5], |_| 0.0).unwrap();
        let tr = solve_exponential_cq(&p, &NodeSet::optimal(2).unwrap(), 0.125, rat15()).unwrap();
        for (t, y) in tr.times().iter().zip(tr.scalar_values()) {
            let exact = 1.5 * gml_real(alpha, 1.0, *t, lambda).unwrap();
            assert!((y - exact).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn shared_grid_points_are_sampled_once() {
        use std::sync::atomic::{AtomicUsize, Ordering};
        use std::sync::Arc;
        let calls = Arc::new(AtomicUsize::new(0));
        let counter = calls.clone();
        let p = LinearFdeProblem::scalar(0.5, 1.0, 0.0, 1.0, &[1.0], move |t| {
            counter.fetch_add(1, Ordering::Relaxed);
            t
        })
        .unwrap();
        solve_exponential_cq(&p, &NodeSet::optimal(3).unwrap(), 0.125, rat15()).unwrap();
        // 8 steps with nodes {0, 1/2, 1}: 9 grid points and 8 midpoints
        assert_eq!(calls.load(Ordering::Relaxed), 17);
    }

    #[test]
    fn rejects_non_dividing_step() {
        let p = LinearFdeProblem::scalar(0.5, 1.0, 0.0, 1.0, &[1.0], |_| 1.0).unwrap();
        assert!(solve_exponential_cq(&p, &NodeSet::optimal(1).unwrap(), 0.3, rat15()).is_err());
    }
}
