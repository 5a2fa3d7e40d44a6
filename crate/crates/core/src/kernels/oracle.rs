//! Brute-force reference for the moment kernels: adaptive Gauss-Kronrod
//! quadrature of the defining integral with the kernel taken from the power
//! series. Slow, and only meant for verification.

use num_complex::Complex64;

use super::KernelRequest;
use crate::error::{Error, Result};
use crate::specfun::series_sum;

/// Largest Mittag-Leffler argument the oracle sums directly.
pub const ORACLE_Z_MAX: f64 = 16.0;

const MAX_SUBINTERVALS: usize = 4000;

// 15-point Kronrod nodes on [-1, 1] (non-negative half) with the embedded
// 7-point Gauss weights.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

fn gk15<F: FnMut(f64) -> Result<f64>>(f: &mut F, a: f64, b: f64) -> Result<(f64, f64)> {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for i in 0..7 {
        let x = h * XGK[i];
        let s = f(c - x)? + f(c + x)?;
        kronrod += WGK[i] * s;
        if i % 2 == 1 {
            gauss += WG[i / 2] * s;
        }
    }
    Ok((kronrod * h, ((kronrod - gauss) * h).abs()))
}

/// Globally adaptive G7-K15 quadrature to absolute tolerance `tol`.
pub fn adaptive_quad<F: FnMut(f64) -> Result<f64>>(mut f: F, a: f64, b: f64, tol: f64) -> Result<f64> {
    let (v, e) = gk15(&mut f, a, b)?;
    let mut intervals = vec![(a, b, v, e)];
    loop {
        let (total, err): (f64, f64) = intervals.iter().fold((0.0, 0.0), |(s, t), iv| (s + iv.2, t + iv.3));
        if err <= tol {
            return Ok(total);
        }
        if intervals.len() >= MAX_SUBINTERVALS {
            return Err(Error::QuadratureNonConvergence { estimate: err });
        }
        let worst =
            intervals.iter().enumerate().max_by(|x, y| x.1 .3.total_cmp(&y.1 .3)).map(|(i, _)| i).expect("non-empty");
        let (lo, hi, _, _) = intervals.swap_remove(worst);
        let mid = 0.5 * (lo + hi);
        let (v1, e1) = gk15(&mut f, lo, mid)?;
        let (v2, e2) = gk15(&mut f, mid, hi)?;
        intervals.push((lo, mid, v1, e1));
        intervals.push((mid, hi, v2, e2));
    }
}

/// `E_{α,α}(-x)` from the series.
fn ml_alpha_alpha(alpha: f64, x: f64) -> Result<f64> {
    if x.abs() > ORACLE_Z_MAX {
        return Err(Error::Domain(format!("oracle argument {x} exceeds the direct-summation limit {ORACLE_Z_MAX}")));
    }
    Ok(series_sum(alpha, alpha, Complex64::new(-x, 0.0), 1e-17)?.re)
}

/// `R̂_{α,k}(j; w) = ∫_0^1 e_{α,α}(j - s; w) s^k ds` by adaptive quadrature.
///
/// At `j = 1` the kernel is singular at `s = 1` when `α < 1`; the substitution
/// `1 - s = x^{1/α}` removes the singularity.
pub fn r_hat_oracle(req: &KernelRequest<f64>, tol: f64) -> Result<f64> {
    req.validate()?;
    let (alpha, w, k) = (req.alpha, req.w, req.k as i32);
    let j = req.j as f64;
    if req.j == 1 && alpha < 1.0 {
        let q = 1.0 / alpha;
        adaptive_quad(
            |x| {
                if x == 0.0 {
                    return Ok(q * ml_alpha_alpha(alpha, 0.0)?);
                }
                let s = 1.0 - x.powf(q);
                Ok(q * ml_alpha_alpha(alpha, x * w)? * s.powi(k))
            },
            0.0,
            1.0,
            tol,
        )
    } else {
        adaptive_quad(
            |s| {
                let u = j - s;
                if u == 0.0 {
                    // α >= 1 here: the kernel is bounded at the endpoint
                    return Ok(if alpha == 1.0 { ml_alpha_alpha(alpha, 0.0)? } else { 0.0 });
                }
                let e = u.powf(alpha - 1.0) * ml_alpha_alpha(alpha, u.powf(alpha) * w)?;
                Ok(e * s.powi(k))
            },
            0.0,
            1.0,
            tol,
        )
    }
}
