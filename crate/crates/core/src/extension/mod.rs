//! Extension of the projected K3 surface to a 6-fold: the lifted map `Phi`,
//! the presentations `A`, `B` of `M` over `R`, the unique corrections, the
//! residuals `K`, `L`, the extended equations and a membership solver.

pub mod corollary;
pub mod data;
pub mod maps;
pub mod membership;
pub mod residual;
pub mod rings;
pub mod wprime;

pub use corollary::{corollary_equations, nu_vector, q_tilde};
pub use data::ExtensionData;
pub use maps::{matrix_a, matrix_b, phi, phi0, verify_presentation, SyzygyVector};
pub use membership::{solve_membership, DegreeBound, MembershipOutcome, MembershipProblem};
pub use residual::{extended_equations, closed_form_eta, closed_form_xi, residuals, verify_kernel, Residual};
pub use rings::ExtensionRings;
pub use wprime::{build_wprime, restriction_matches};
