//! Benchmark problems, reference solutions and convergence reports.

mod problems;
mod report;

pub use problems::{
    exact_pde_semidiscrete, exact_t1, reference_fine_grid, Reference, TestProblem, DEFAULT_LAMBDA, DEFAULT_Y0,
    REFERENCE_STEP,
};
pub use report::{
    eoc, halving_steps, merged_csv, parse_method, run_convergence, terminal_error, ConvergenceReport, ConvergenceRow,
    MethodSpec, UNSTABLE_ERROR,
};
