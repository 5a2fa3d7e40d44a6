//! Problem description, the exponential convolution-quadrature stepper and
//! the method-of-lines builder for the time-fractional heat equation.

mod cq;
mod mol;
mod problem;

pub use cq::solve_exponential_cq;
pub use mol::{laplacian_1d, mol_discretize, mol_first_eigenvalue, mol_grid};
pub use problem::{initial_condition_count, Coefficient, Forcing, LinearFdeProblem, Trajectory, TrajectoryMeta};
