use std::fmt::Write as _;

use nalgebra::DMatrix;

use super::{vandermonde_solve_in_place, NodeSet};
use crate::error::{Error, Result};
use crate::kernels::{
    r_hat_oracle, KernelRequest, MatrixKernel, MatrixMoments, RationalApproximation, ScalarKernel, ScalarMoments,
};
use crate::linalg::{inf_norm, MomentValue};
use crate::solvers::Coefficient;

/// Relative tolerance of the order-condition residual, scaled by
/// `max(1, |RHS|)`.
pub const WEIGHT_RESIDUAL_TOL: f64 = 1e-10;

/// Relative tolerance used by [`degree_of_precision`].
pub const PRECISION_TOL: f64 = 1e-9;

/// Per-lag weights: `weights[j - 1][r]` is `b_r(j)` or the matrix `B_r(j)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Weights {
    Scalar(Vec<Vec<f64>>),
    Matrix(Vec<Vec<DMatrix<f64>>>),
}

/// Quadrature weights for lags `j = 1..n`, computed once and then read-only.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable {
    pub h: f64,
    pub alpha: f64,
    pub coeff: Coefficient,
    pub nodes: NodeSet,
    pub weights: Weights,
    /// Largest scaled order-condition residual over all lags and moments.
    pub max_residual: f64,
}

impl WeightTable {
    pub fn lags(&self) -> usize {
        match &self.weights {
            Weights::Scalar(w) => w.len(),
            Weights::Matrix(w) => w.len(),
        }
    }

    /// Scalar weights `b(j)`, or `None` for a matrix table.
    pub fn scalar(&self, j: usize) -> Option<&[f64]> {
        match &self.weights {
            Weights::Scalar(w) => w.get(j.checked_sub(1)?).map(Vec::as_slice),
            Weights::Matrix(_) => None,
        }
    }

    pub fn matrix(&self, j: usize) -> Option<&[DMatrix<f64>]> {
        match &self.weights {
            Weights::Matrix(w) => w.get(j.checked_sub(1)?).map(Vec::as_slice),
            Weights::Scalar(_) => None,
        }
    }

    /// CSV rows `j,r,value` (scalar) or `j,r,row,col,value` (matrix), with
    /// `r` counted from 1.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        match &self.weights {
            Weights::Scalar(w) => {
                out.push_str("j,r,value\n");
                for (j, b) in w.iter().enumerate() {
                    for (r, v) in b.iter().enumerate() {
                        let _ = writeln!(out, "{},{},{v:.15e}", j + 1, r + 1);
                    }
                }
            }
            Weights::Matrix(w) => {
                out.push_str("j,r,row,col,value\n");
                for (j, b) in w.iter().enumerate() {
                    for (r, m) in b.iter().enumerate() {
                        for (row, col) in (0..m.nrows()).flat_map(|i| (0..m.ncols()).map(move |k| (i, k))) {
                            let _ = writeln!(out, "{},{},{row},{col},{:.15e}", j + 1, r + 1, m[(row, col)]);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Weight table plus the kernels `e_{α,k+1}(n; h^α λ)`, `k < extra`, at every
/// grid index `n = 0..=steps`. The solver gets its homogeneous terms from the
/// same kernel evaluations that produce the weights.
pub(crate) struct TableWithHomogeneous<T> {
    pub table: WeightTable,
    pub homogeneous: Vec<Vec<T>>,
}

fn check_residual<T: MomentValue>(
    nodes: &NodeSet,
    b: &[T],
    rhs: &[T],
    norm: impl Fn(&T) -> f64,
    lag: usize,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for (k, target) in rhs.iter().enumerate() {
        let mut lhs = target.zero_like();
        for (c, br) in nodes.nodes().iter().zip(b) {
            lhs.axpy(c.powi(k as i32), br);
        }
        lhs.axpy(-1.0, target);
        let res = norm(&lhs) / norm(target).max(1.0);
        if !(res <= WEIGHT_RESIDUAL_TOL) {
            return Err(Error::WeightAccuracy { lag, moment: k, residual: res });
        }
        worst = worst.max(res);
    }
    Ok(worst)
}

/// Shared driver: `moments(j)` returns `R̂_{α,k}(j)` for `k < ν` and
/// `homogeneous(t)` returns `e_{α,k+1}(t)` for the initial-condition terms.
fn assemble<T: MomentValue>(
    nodes: &NodeSet,
    alpha: f64,
    h: f64,
    n: usize,
    mut moments: impl FnMut(usize) -> Result<Vec<T>>,
    mut homogeneous: impl FnMut(f64, usize) -> Result<Vec<T>>,
    norm: impl Fn(&T) -> f64,
) -> Result<(Vec<Vec<T>>, Vec<Vec<T>>, f64)> {
    let ha = h.powf(alpha);
    let mut weights = Vec::with_capacity(n);
    let mut homog = Vec::with_capacity(n + 1);
    homog.push(homogeneous(0.0, 0)?);
    let mut max_residual = 0.0f64;
    for j in 1..=n {
        let mut rhs = moments(j)?;
        for v in rhs.iter_mut() {
            v.scale(ha);
        }
        let targets = rhs.clone();
        vandermonde_solve_in_place(nodes, &mut rhs);
        max_residual = max_residual.max(check_residual(nodes, &rhs, &targets, &norm, j)?);
        weights.push(rhs);
        homog.push(homogeneous(j as f64, j)?);
    }
    Ok((weights, homog, max_residual))
}

fn homogeneous_betas(extra: usize) -> Vec<f64> {
    (1..=extra).map(|k| k as f64).collect()
}

pub(crate) fn build_scalar_with_homogeneous(
    alpha: f64,
    lambda: f64,
    h: f64,
    n: usize,
    nodes: &NodeSet,
    rat: &RationalApproximation,
    extra: usize,
) -> Result<TableWithHomogeneous<f64>> {
    validate_table_args(alpha, h, n)?;
    let w = h.powf(alpha) * lambda;
    let mut moments = ScalarMoments::new(alpha, w, nodes.nu(), rat)?;
    let mut homog = (extra > 0).then(|| ScalarKernel::new(alpha, w, &homogeneous_betas(extra), rat)).transpose()?;
    let (weights, homogeneous, max_residual) = assemble(
        nodes,
        alpha,
        h,
        n,
        |j| moments.eval(j),
        |t, _| match homog.as_mut() {
            Some(k) => Ok(k.eval(t)?.to_vec()),
            None => Ok(Vec::new()),
        },
        |v: &f64| v.abs(),
    )?;
    Ok(TableWithHomogeneous {
        table: WeightTable {
            h,
            alpha,
            coeff: Coefficient::Scalar(lambda),
            nodes: nodes.clone(),
            weights: Weights::Scalar(weights),
            max_residual,
        },
        homogeneous,
    })
}

pub(crate) fn build_matrix_with_homogeneous(
    alpha: f64,
    a: &DMatrix<f64>,
    h: f64,
    n: usize,
    nodes: &NodeSet,
    rat: &RationalApproximation,
    extra: usize,
) -> Result<TableWithHomogeneous<DMatrix<f64>>> {
    validate_table_args(alpha, h, n)?;
    let w = a * h.powf(alpha);
    let mut moments = MatrixMoments::new(alpha, &w, nodes.nu(), rat)?;
    let homog = (extra > 0).then(|| MatrixKernel::new(alpha, &w, &homogeneous_betas(extra), rat)).transpose()?;
    let (weights, homogeneous, max_residual) = assemble(
        nodes,
        alpha,
        h,
        n,
        |j| moments.eval(j),
        |t, lag| match &homog {
            Some(k) => k.eval(t, lag),
            None => Ok(Vec::new()),
        },
        inf_norm,
    )?;
    Ok(TableWithHomogeneous {
        table: WeightTable {
            h,
            alpha,
            coeff: Coefficient::Matrix(a.clone()),
            nodes: nodes.clone(),
            weights: Weights::Matrix(weights),
            max_residual,
        },
        homogeneous,
    })
}

fn validate_table_args(alpha: f64, h: f64, n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidProblem("weight table needs at least one lag".into()));
    }
    if !(h > 0.0) || !h.is_finite() {
        return Err(Error::InvalidProblem(format!("step size must be positive, got {h}")));
    }
    if !(alpha > 0.0) {
        return Err(Error::Domain(format!("alpha must be positive, got {alpha}")));
    }
    Ok(())
}

/// Weights `b_r(j)` (or `B_r(j)`) for `j = 1..=n`, obtained from the order
/// conditions `Σ_r b_r(j) c_r^k = h^α R̂_{α,k}(j; h^α λ)`, `k < ν`.
pub fn build_weight_table(
    alpha: f64,
    coeff: &Coefficient,
    h: f64,
    n: usize,
    nodes: &NodeSet,
    rat: &RationalApproximation,
) -> Result<WeightTable> {
    Ok(match coeff {
        Coefficient::Scalar(l) => build_scalar_with_homogeneous(alpha, *l, h, n, nodes, rat, 0)?.table,
        Coefficient::Matrix(a) => build_matrix_with_homogeneous(alpha, a, h, n, nodes, rat, 0)?.table,
    })
}

/// Largest `d` such that `b` integrates `u^k`, `k = 0..=d`, against the lag-`j`
/// kernel to relative accuracy [`PRECISION_TOL`], judged against the
/// quadrature oracle. `None` if even constants fail. Checks at most up to
/// `d = ν + 3`.
pub fn degree_of_precision(nodes: &NodeSet, b: &[f64], j: usize, alpha: f64, w: f64, h: f64) -> Result<Option<usize>> {
    if b.len() != nodes.nu() {
        return Err(Error::InvalidNodes(format!("{} weights for {} nodes", b.len(), nodes.nu())));
    }
    let ha = h.powf(alpha);
    let mut degree = None;
    for k in 0..=nodes.nu() + 3 {
        let exact = ha * r_hat_oracle(&KernelRequest { j, k, alpha, w }, 1e-15)?;
        let approx: f64 = nodes.nodes().iter().zip(b).map(|(c, br)| c.powi(k as i32) * br).sum();
        if (approx - exact).abs() > PRECISION_TOL * exact.abs() {
            break;
        }
        degree = Some(k);
    }
    Ok(degree)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gamma;

    fn rat15() -> &'static RationalApproximation {
        RationalApproximation::shared(15).unwrap()
    }

    #[test]
    fn classical_trapezoid_is_lag_independent() {
        let nodes = NodeSet::new(vec![0.0, 1.0]).unwrap();
        let h = 0.125;
        let t = build_weight_table(1.0, &Coefficient::Scalar(0.0), h, 40, &nodes, rat15()).unwrap();
        for j in 1..=40 {
            let b = t.scalar(j).unwrap();
            assert!((b[0] - h / 2.0).abs() < 1e-14 && (b[1] - h / 2.0).abs() < 1e-14, "{j}");
        }
    }

    #[test]
    fn product_rectangle_weights() {
        let (alpha, h) = (0.5, 1.0 / 16.0);
        let nodes = NodeSet::optimal(1).unwrap();
        let t = build_weight_table(alpha, &Coefficient::Scalar(0.0), h, 64, &nodes, rat15()).unwrap();
        let g = gamma(alpha + 1.0).unwrap();
        for j in 1..=64 {
            let jf = j as f64;
            let exact = h.powf(alpha) * (jf.powf(alpha) - (jf - 1.0).powf(alpha)) / g;
            assert!((t.scalar(j).unwrap()[0] - exact).abs() <= 1e-12 * exact, "{j}");
        }
    }

    #[test]
    fn diagonal_matrix_matches_scalar_tables() {
        let d = [0.0, 1.0, 7.5];
        let a = DMatrix::from_diagonal(&nalgebra::DVector::from_row_slice(&d));
        let nodes = NodeSet::optimal(3).unwrap();
        let h = 1.0 / 32.0;
        let mt = build_weight_table(0.7, &Coefficient::Matrix(a), h, 12, &nodes, rat15()).unwrap();
        for (i, &di) in d.iter().enumerate() {
            let st = build_weight_table(0.7, &Coefficient::Scalar(di), h, 12, &nodes, rat15()).unwrap();
            for j in 1..=12 {
                for (bm, bs) in mt.matrix(j).unwrap().iter().zip(st.scalar(j).unwrap()) {
                    assert!((bm[(i, i)] - bs).abs() < 1e-13);
                    let off: f64 = (0..3).filter(|&k| k != i).map(|k| bm[(i, k)].abs()).sum();
                    assert!(off < 1e-13);
                }
            }
        }
    }

    #[test]
    fn degree_of_precision_examples() {
        let h = 0.1;
        let trap = NodeSet::new(vec![0.0, 1.0]).unwrap();
        assert_eq!(degree_of_precision(&trap, &[h / 2.0, h / 2.0], 3, 1.0, 0.0, h).unwrap(), Some(1));
        let mid = NodeSet::optimal(1).unwrap();
        assert_eq!(degree_of_precision(&mid, &[h], 2, 1.0, 0.0, h).unwrap(), Some(1));
        assert_eq!(degree_of_precision(&mid, &[2.0 * h], 2, 1.0, 0.0, h).unwrap(), None);
    }

    #[test]
    fn built_tables_reach_their_design_degree() {
        let (alpha, lambda, h): (f64, f64, f64) = (0.5, 3.0, 0.125);
        let w = h.powf(alpha) * lambda;
        for nu in 1..=4 {
            let nodes = NodeSet::optimal(nu).unwrap();
            let t = build_weight_table(alpha, &Coefficient::Scalar(lambda), h, 4, &nodes, rat15()).unwrap();
            for j in 1..=4 {
                let d = degree_of_precision(&nodes, t.scalar(j).unwrap(), j, alpha, w, h).unwrap();
                assert!(d.is_some_and(|d| d + 1 >= nu), "nu={nu} j={j} d={d:?}");
            }
        }
    }

    #[test]
    fn csv_layout() {
        let nodes = NodeSet::optimal(2).unwrap();
        let t = build_weight_table(0.5, &Coefficient::Scalar(1.0), 0.5, 2, &nodes, rat15()).unwrap();
        let csv = t.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "j,r,value");
        assert_eq!(lines.len(), 5);
        assert!(lines[4].starts_with("2,2,"));
    }

    #[test]
    fn rejects_empty_horizon_and_negative_coefficient() {
        let nodes = NodeSet::optimal(1).unwrap();
        assert!(build_weight_table(0.5, &Coefficient::Scalar(1.0), 0.1, 0, &nodes, rat15()).is_err());
        assert!(build_weight_table(0.5, &Coefficient::Scalar(-1.0), 0.1, 3, &nodes, rat15()).is_err());
    }
}
