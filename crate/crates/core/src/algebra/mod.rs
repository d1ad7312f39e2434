//! Exact polynomial algebra over the Gaussian rationals.

pub mod context;
pub mod gaussian;
pub mod linsolve;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod ringmap;
pub mod univariate;

pub use context::{Ctx, VariableContext};
pub use gaussian::GaussianRational;
pub use linsolve::{solve_linear_exact, LinearSolution, SparseSystem};
pub use matrix::PolyMatrix;
pub use parse::{parse_poly, parse_scalar};
pub use poly::{Homogeneity, Monomial, MultiPoly};
pub use ringmap::RingMap;
pub use univariate::UniPoly;
