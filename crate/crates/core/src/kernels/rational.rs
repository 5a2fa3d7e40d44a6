use std::sync::OnceLock;

use num_complex::Complex64;

use super::cf_table::CF_TABLE;
use crate::error::{Error, Result};

pub const MIN_DEGREE: usize = 2;
pub const MAX_DEGREE: usize = 16;

/// Type `(N-1, N)` rational approximation `Σ_k r_k / (x - τ_k)` to `e^x` on
/// `(-∞, 0]`.
///
/// Poles and residues are the Carathéodory-Fejér approximation computed
/// offline in extended precision (`tools/cf_table_mp.py`) with the constant
/// term at infinity dropped. They are stored ordered by decreasing imaginary
/// part, so the pole with index `i` is paired with the one at `N - 1 - i`.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalApproximation {
    degree: usize,
    poles: Vec<Complex64>,
    residues: Vec<Complex64>,
}

/// One term of the conjugate-halved partial-fraction sum.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HalfTerm {
    pub pole: Complex64,
    pub residue: Complex64,
    /// 2 for a pole standing in for a conjugate pair, 1 for the real pole.
    pub weight: f64,
}

impl RationalApproximation {
    /// Looks up the tabulated approximation of the given degree.
    pub fn new(degree: usize) -> Result<Self> {
        let (_, entries) = CF_TABLE.iter().find(|(n, _)| *n == degree).ok_or(Error::UnsupportedDegree(degree))?;
        let poles = entries.iter().map(|e| Complex64::new(e.0, e.1)).collect();
        let residues = entries.iter().map(|e| Complex64::new(e.2, e.3)).collect();
        Ok(Self { degree, poles, residues })
    }

    /// Process-wide instance for a given degree.
    pub fn shared(degree: usize) -> Result<&'static Self> {
        static CACHE: OnceLock<Vec<RationalApproximation>> = OnceLock::new();
        let all = CACHE.get_or_init(|| {
            (MIN_DEGREE..=MAX_DEGREE).map(|n| Self::new(n).expect("table covers every supported degree")).collect()
        });
        if !(MIN_DEGREE..=MAX_DEGREE).contains(&degree) {
            return Err(Error::UnsupportedDegree(degree));
        }
        Ok(&all[degree - MIN_DEGREE])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn poles(&self) -> &[Complex64] {
        &self.poles
    }

    pub fn residues(&self) -> &[Complex64] {
        &self.residues
    }

    /// `R_N(x) = Σ_k r_k / (x - τ_k)`, full sum in ascending pole order.
    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.poles.iter().zip(&self.residues).map(|(&p, &r)| r / (x - p)).sum()
    }

    /// `R_N(x)` for real `x`, summing one pole per conjugate pair.
    pub fn eval_real(&self, x: f64) -> f64 {
        self.half_terms().map(|t| t.weight * (t.residue / (x - t.pole)).re).sum()
    }

    /// Poles with positive imaginary part (weight 2) followed by the real
    /// pole when the degree is odd (weight 1).
    pub(crate) fn half_terms(&self) -> impl Iterator<Item = HalfTerm> + '_ {
        let n = self.degree;
        (0..n.div_ceil(2)).map(move |i| HalfTerm {
            pole: self.poles[i],
            residue: self.residues[i],
            weight: if 2 * i + 1 == n { 1.0 } else { 2.0 },
        })
    }
}
