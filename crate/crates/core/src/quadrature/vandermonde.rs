use super::NodeSet;
use crate::error::Result;
use crate::linalg::MomentValue;

/// Solves `C x = rhs` in place, `C[k][r] = c_r^k`, by Björck-Pereyra
/// elimination (Newton-form divided differences, O(ν²), no explicit matrix).
///
/// The right-hand side entries may be scalars or matrices; with matrix entries
/// this is the Kronecker system `(C ⊗ I) X = R` solved column by column with
/// the same elimination sequence.
pub fn vandermonde_solve_in_place<T: MomentValue>(nodes: &NodeSet, rhs: &mut [T]) {
    let c = nodes.nodes();
    let n = c.len();
    assert_eq!(rhs.len(), n, "right-hand side length must equal the node count");
    for k in 0..n.saturating_sub(1) {
        for i in (k + 1..n).rev() {
            let prev = rhs[i - 1].clone();
            rhs[i].axpy(-c[k], &prev);
        }
    }
    for k in (0..n.saturating_sub(1)).rev() {
        for i in k + 1..n {
            rhs[i].scale(1.0 / (c[i] - c[i - k - 1]));
        }
        for i in k..n - 1 {
            let next = rhs[i + 1].clone();
            rhs[i].axpy(-1.0, &next);
        }
    }
}

/// Scalar convenience wrapper around [`vandermonde_solve_in_place`].
///
/// Duplicate nodes cannot reach this point: [`NodeSet`] rejects them.
pub fn vandermonde_solve(nodes: &NodeSet, rhs: &[f64]) -> Result<Vec<f64>> {
    let mut x = rhs.to_vec();
    if x.len() != nodes.nu() {
        return Err(crate::error::Error::InvalidNodes(format!(
            "right-hand side has {} entries for {} nodes",
            x.len(),
            nodes.nu()
        )));
    }
    vandermonde_solve_in_place(nodes, &mut x);
    Ok(x)
}

/// `max_k |Σ_r c_r^k x_r - rhs_k|`.
pub fn vandermonde_residual(nodes: &NodeSet, x: &[f64], rhs: &[f64]) -> f64 {
    rhs.iter()
        .enumerate()
        .map(|(k, b)| {
            let lhs: f64 = nodes.nodes().iter().zip(x).map(|(c, xr)| c.powi(k as i32) * xr).sum();
            (lhs - b).abs()
        })
        .fold(0.0, f64::max)
}
