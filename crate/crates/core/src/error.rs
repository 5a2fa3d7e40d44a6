use thiserror::Error;

/// Errors raised by kernel evaluation, weight construction and the solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function has a pole at {0}")]
    GammaPole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series did not converge after {terms} terms (|z| = {z_abs})")]
    SeriesNonConvergence { terms: usize, z_abs: f64 },

    #[error("unsupported rational approximation degree {0} (supported: 2..=16)")]
    UnsupportedDegree(usize),

    #[error("near-singular partial-fraction denominator at pole {pole} (|d| = {magnitude:e})")]
    SingularDenominator { pole: usize, magnitude: f64 },

    #[error("singular shifted system at pole {pole}, lag {lag}")]
    SingularSolve { pole: usize, lag: usize },

    #[error("invalid node set: {0}")]
    InvalidNodes(String),

    #[error("order-condition residual {residual:e} exceeds tolerance at lag {lag}, moment {moment}")]
    WeightAccuracy { lag: usize, moment: usize, residual: f64 },

    #[error("quadrature did not converge (estimated error {estimate:e})")]
    QuadratureNonConvergence { estimate: f64 },

    #[error("non-finite state at step {step}")]
    NonFiniteState { step: usize },

    #[error("invalid problem: {0}")]
    InvalidProblem(String),

    #[error("singular implicit step matrix")]
    SingularImplicitStep,

    #[error("report I/O: {0}")]
    Report(String),
}

pub type Result<T> = std::result::Result<T, Error>;
