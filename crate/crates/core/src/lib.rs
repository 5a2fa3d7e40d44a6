//! Exponential quadrature for linear fractional differential equations
//! `D^α y + λ y = f(t)` with Caputo derivative of order `0 < α < 2`.
//!
//! * [`specfun`]: Gamma and Mittag-Leffler functions by power series.
//! * [`kernels`]: rational approximation of `e^x` on `(-∞, 0]` and the
//!   partial-fraction kernels built from it.
//! * [`quadrature`]: node sets and weights from the order conditions.
//! * [`solvers`]: the convolution-quadrature stepper, scalar and matrix.
//! * [`baselines`]: fractional PECE and implicit product trapezoidal rule.
//! * [`harness`]: test problems, references and convergence reports.

pub mod baselines;
pub mod error;
pub mod harness;
pub mod kernels;
pub mod linalg;
pub mod quadrature;
pub mod solvers;
pub mod specfun;

pub use error::{Error, Result};
pub use kernels::RationalApproximation;
pub use quadrature::NodeSet;
pub use solvers::{solve_exponential_cq, Coefficient, LinearFdeProblem, Trajectory};
