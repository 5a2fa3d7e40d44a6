use std::sync::OnceLock;

use gauss_quad::legendre::GaussLegendre;

use super::scalar::factorial;
use crate::error::Result;
use crate::linalg::MomentValue;

/// Gauss-Legendre points per panel.
pub const GL_POINTS: usize = 20;
/// Dyadic levels between `t = 1` and the kernel singularity at the origin
/// for lag 1. The leftover `[0, 2^-ORIGIN_LEVELS]` is handled in closed form.
pub const ORIGIN_LEVELS: i32 = 24;
/// Largest `rate·width` a panel is allowed to carry.
const PANEL_SPAN: f64 = 8.0;

/// Gauss-Legendre rule mapped to `[0, 1]`.
fn unit_rule() -> &'static [(f64, f64)] {
    static RULE: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    RULE.get_or_init(|| {
        let points = std::num::NonZeroUsize::new(GL_POINTS).expect("nonzero");
        GaussLegendre::new(points).as_node_weight_pairs().iter().map(|&(x, w)| (0.5 * (1.0 + x), 0.5 * w)).collect()
    })
}

/// Panel layout for the moment integrals of one kernel `e_{α,α}(t; w)`.
///
/// Integrals run over `d = t - (j - 1) ∈ [0, 1]`. Panels are graded
/// geometrically toward `d = 0`, where the kernel is largest, and split
/// further wherever it oscillates. Both scales come from the modulus
/// `m = |w|^{1/α}` of the transform singularities: the kernel decays on the
/// scale `1/m` and, for `α > 1`, oscillates with frequency `m·sin(π/α)`.
#[derive(Debug, Clone)]
pub(crate) struct MomentRule {
    /// panels for lags `j >= 2`
    regular: Vec<(f64, f64)>,
    /// panels for lag 1, above `origin_eps`
    first: Vec<(f64, f64)>,
    origin_eps: f64,
}

impl MomentRule {
    /// `modulus` bounds `|w|^{1/α}` (for a matrix, use a norm of `W`).
    pub(crate) fn new(alpha: f64, modulus: f64) -> Self {
        let m = if modulus.is_finite() { modulus.min(1e12) } else { 1e12 };
        let osc = if alpha > 1.0 { m * (std::f64::consts::PI / alpha).sin() } else { 0.0 };
        let grade = |floor: f64| {
            let mut edges = vec![1.0];
            let mut d = 1.0f64;
            while 0.5 * d >= floor {
                d *= 0.5;
                edges.push(d);
            }
            edges
        };
        let split = |edges: &[f64], close: bool| {
            let mut panels = Vec::new();
            let mut bounds: Vec<f64> = edges.to_vec();
            if close {
                bounds.push(0.0);
            }
            for w in bounds.windows(2) {
                let (hi, lo) = (w[0], w[1]);
                let pieces = 1 + ((hi - lo) * osc / PANEL_SPAN).floor().min(1e6) as usize;
                let step = (hi - lo) / pieces as f64;
                for p in 0..pieces {
                    panels.push((lo + p as f64 * step, lo + (p + 1) as f64 * step));
                }
            }
            panels
        };
        let regular_edges = grade((0.5 * PANEL_SPAN / m.max(1e-300)).min(1.0));
        let first_edges = grade(2f64.powi(-ORIGIN_LEVELS));
        let origin_eps = *first_edges.last().expect("non-empty");
        Self { regular: split(&regular_edges, true), first: split(&first_edges, false), origin_eps }
    }

    #[cfg(test)]
    pub(crate) fn panel_count(&self, j: usize) -> usize {
        if j == 1 {
            self.first.len()
        } else {
            self.regular.len()
        }
    }
}

/// Moment kernels `R̂_k(j) = ∫_0^1 e_{α,α}(j - s) s^k ds` for `k < count`.
///
/// `kernel(t)` evaluates `e_{α,α}(t; w)`. For `j >= 2` the integrand is
/// analytic on the step and Gauss-Legendre panels integrate it directly.
/// At `j = 1` the kernel is singular at `s = 1`; dyadic panels approach the
/// singularity and the last piece `[0, ε]` uses
/// `∫_0^ε e_{α,α}(u) (ε - u)^m du = m! e_{α,α+m+1}(ε)`, with the values
/// `e_{α,α+m+1}(ε)` for `m < count` supplied by `tail(ε)`.
///
/// Evaluating each `R̂_k(j)` as a combination of `e_{α,α+ℓ+1}` at `j` and
/// `j - 1` is exact in theory but loses about `j^{k+1}` in relative accuracy
/// to cancellation, and the partial-fraction error of `e_{α,β}` grows with
/// `β`. The quadrature form only needs `β = α`.
pub(crate) fn moments_by_quadrature<T: MomentValue>(
    j: usize,
    count: usize,
    rule: &MomentRule,
    mut kernel: impl FnMut(f64) -> Result<T>,
    tail: impl FnOnce(f64) -> Result<Vec<T>>,
) -> Result<Vec<T>> {
    let base = (j - 1) as f64;
    let panels = if j == 1 { &rule.first } else { &rule.regular };
    let mut acc: Vec<T> = Vec::new();
    for &(lo, hi) in panels {
        let len = hi - lo;
        for &(x, w) in unit_rule() {
            let d = lo + len * x;
            let v = kernel(base + d)?;
            if acc.is_empty() {
                acc = (0..count).map(|_| v.zero_like()).collect();
            }
            // s = 1 - d
            let s = 1.0 - d;
            let mut sk = w * len;
            for slot in acc.iter_mut() {
                slot.axpy(sk, &v);
                sk *= s;
            }
        }
    }
    if j == 1 {
        let eps = rule.origin_eps;
        let e = tail(eps)?;
        // (1 - u)^k = Σ_m C(k, m) (1 - ε)^{k-m} (ε - u)^m and
        // ∫_0^ε e(u) (ε - u)^m du = m! e_{α,α+m+1}(ε)
        for (k, slot) in acc.iter_mut().enumerate() {
            for (m, em) in e.iter().enumerate().take(k + 1) {
                let binom = factorial(k) / (factorial(m) * factorial(k - m));
                slot.axpy(binom * (1.0 - eps).powi((k - m) as i32) * factorial(m), em);
            }
        }
    }
    Ok(acc)
}
