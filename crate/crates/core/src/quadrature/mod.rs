//! Node sets, the node-polynomial functional `P_K`, and quadrature weights
//! from the order conditions.

mod nodes;
mod vandermonde;
mod weights;

pub use nodes::{node_poly_integral, node_polynomial, NodeSet, MAX_NODES, MIN_NODE_GAP};
pub use vandermonde::{vandermonde_residual, vandermonde_solve, vandermonde_solve_in_place};
pub use weights::{build_weight_table, degree_of_precision, WeightTable, Weights, PRECISION_TOL, WEIGHT_RESIDUAL_TOL};

pub(crate) use weights::{build_matrix_with_homogeneous, build_scalar_with_homogeneous};
