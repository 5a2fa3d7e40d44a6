use std::fmt;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// The coefficient `λ` of `D^α y + λ y = f`: a scalar or an `M×M` matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum Coefficient {
    Scalar(f64),
    Matrix(DMatrix<f64>),
}

impl Coefficient {
    /// State dimension (1 for a scalar coefficient).
    pub fn dim(&self) -> usize {
        match self {
            Coefficient::Scalar(_) => 1,
            Coefficient::Matrix(m) => m.nrows(),
        }
    }

    /// `s·λ`.
    pub fn scaled(&self, s: f64) -> Coefficient {
        match self {
            Coefficient::Scalar(l) => Coefficient::Scalar(s * l),
            Coefficient::Matrix(m) => Coefficient::Matrix(m * s),
        }
    }

    /// The coefficient as a dense matrix (1×1 for scalars).
    pub fn to_matrix(&self) -> DMatrix<f64> {
        match self {
            Coefficient::Scalar(l) => DMatrix::from_element(1, 1, *l),
            Coefficient::Matrix(m) => m.clone(),
        }
    }
}

/// Right-hand side `f(t)`, written into a slice of the state dimension.
pub type Forcing = Arc<dyn Fn(f64, &mut [f64]) + Send + Sync>;

/// Linear fractional initial value problem `D^α y + λ y = f(t)` on
/// `[t0, t_end]` with Caputo derivative and `m = ⌈α⌉` initial values
/// `y^{(k)}(t0)`.
#[derive(Clone)]
pub struct LinearFdeProblem {
    pub alpha: f64,
    pub coeff: Coefficient,
    pub t0: f64,
    pub t_end: f64,
    pub init: Vec<DVector<f64>>,
    pub forcing: Forcing,
}

impl fmt::Debug for LinearFdeProblem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LinearFdeProblem")
            .field("alpha", &self.alpha)
            .field("coeff", &self.coeff)
            .field("t0", &self.t0)
            .field("t_end", &self.t_end)
            .field("init", &self.init)
            .finish_non_exhaustive()
    }
}

/// Number of initial conditions for order `α`.
pub fn initial_condition_count(alpha: f64) -> usize {
    alpha.ceil().max(1.0) as usize
}

impl LinearFdeProblem {
    /// Scalar problem with forcing `f: t -> f(t)`.
    pub fn scalar<F>(alpha: f64, lambda: f64, t0: f64, t_end: f64, init: &[f64], f: F) -> Result<Self>
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let p = Self {
            alpha,
            coeff: Coefficient::Scalar(lambda),
            t0,
            t_end,
            init: init.iter().map(|&v| DVector::from_element(1, v)).collect(),
            forcing: Arc::new(move |t, out: &mut [f64]| out[0] = f(t)),
        };
        p.validate()?;
        Ok(p)
    }

    /// System `D^α U + A U = F(t)`.
    pub fn matrix<F>(alpha: f64, a: DMatrix<f64>, t0: f64, t_end: f64, init: Vec<DVector<f64>>, f: F) -> Result<Self>
    where
        F: Fn(f64, &mut [f64]) + Send + Sync + 'static,
    {
        let p = Self { alpha, coeff: Coefficient::Matrix(a), t0, t_end, init, forcing: Arc::new(f) };
        p.validate()?;
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.coeff.dim()
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !(self.alpha < 2.0) {
            return Err(Error::InvalidProblem(format!("order must lie in (0, 2), got {}", self.alpha)));
        }
        if !(self.t0 < self.t_end) {
            return Err(Error::InvalidProblem(format!("need t0 < T, got t0 = {}, T = {}", self.t0, self.t_end)));
        }
        let m = initial_condition_count(self.alpha);
        if self.init.len() != m {
            return Err(Error::InvalidProblem(format!(
                "order {} needs {m} initial values, got {}",
                self.alpha,
                self.init.len()
            )));
        }
        if let Coefficient::Matrix(a) = &self.coeff {
            if !a.is_square() || a.nrows() == 0 {
                return Err(Error::InvalidProblem("coefficient matrix must be square".into()));
            }
        }
        let dim = self.dim();
        if self.init.iter().any(|v| v.len() != dim) {
            return Err(Error::InvalidProblem(format!("initial values must have dimension {dim}")));
        }
        Ok(())
    }

    /// Number of steps of size `h` covering `[t0, t_end]`; the interval must
    /// be an integer multiple of `h` to within `1e-12` (relative).
    pub fn step_count(&self, h: f64) -> Result<usize> {
        if !(h > 0.0) || !h.is_finite() {
            return Err(Error::InvalidProblem(format!("step size must be positive, got {h}")));
        }
        let ratio = (self.t_end - self.t0) / h;
        let n = ratio.round();
        if n < 1.0 || (ratio - n).abs() > 1e-12 * n.max(1.0) {
            return Err(Error::InvalidProblem(format!(
                "interval length {} is not a positive integer multiple of h = {h}",
                self.t_end - self.t0
            )));
        }
        Ok(n as usize)
    }

    pub fn eval_forcing(&self, t: f64) -> DVector<f64> {
        let mut out = DVector::zeros(self.dim());
        (self.forcing)(t, out.as_mut_slice());
        out
    }
}

/// Metadata attached to a computed trajectory.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TrajectoryMeta {
    pub method: String,
    pub nodes: Option<Vec<f64>>,
    pub kernel_degree: Option<usize>,
    pub wall_seconds: f64,
}

/// Numerical solution on the equispaced mesh `t_n = t0 + n h`.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub h: f64,
    pub t0: f64,
    pub values: Vec<DVector<f64>>,
    pub meta: TrajectoryMeta,
    /// Set by explicit baselines when the iteration produced non-finite
    /// values; such trajectories are reported rather than rejected.
    pub diverged: bool,
}

impl Trajectory {
    pub fn steps(&self) -> usize {
        self.values.len() - 1
    }

    pub fn times(&self) -> Vec<f64> {
        (0..self.values.len()).map(|n| self.t0 + n as f64 * self.h).collect()
    }

    pub fn last(&self) -> &DVector<f64> {
        self.values.last().expect("trajectory holds at least the initial value")
    }

    /// First component of every state, convenient for scalar problems.
    pub fn scalar_values(&self) -> Vec<f64> {
        self.values.iter().map(|v| v[0]).collect()
    }

    /// CSV with a `t` column followed by one column per state component.
    pub fn to_csv(&self) -> String {
        let dim = self.values.first().map_or(0, |v| v.len());
        let mut out = String::from("t");
        if dim == 1 {
            out.push_str(",y");
        } else {
            for i in 0..dim {
                out.push_str(&format!(",y{i}"));
            }
        }
        out.push('\n');
        for (t, v) in self.times().iter().zip(&self.values) {
            out.push_str(&format!("{t:.15e}"));
            for x in v.iter() {
                out.push_str(&format!(",{x:.15e}"));
            }
            out.push('\n');
        }
        out
    }
}
