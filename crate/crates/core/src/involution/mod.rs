//! Involutions on the tower and the Godeaux layer.

pub mod curve;
pub mod fano;
pub mod godeaux;
pub mod k3;
pub mod spec;

pub use curve::{check_curve_involution, sigma_d, sigma_e, tau_e, CurveInvolutionReport};
pub use fano::{
    check_phi_equivariance, check_tprime_swap, fixed_planes_check, sigma_p5, sigma_tprime, sigma_tprime_equations,
    sigma_wprime, FixedPlanesReport, PhiEquivarianceReport,
};
pub use godeaux::{godeaux_assembly, sigma_w, EigenspaceTable, GodeauxChoices, GodeauxReport};
pub use k3::{
    candidate_point, check_k3_involution, fixed_quartic, sigma_t, verify_fixed_point, BranchSwapData, FixedPointCheck,
};
pub use spec::{DeclaredSquare, FixedWitness, InvolutionSpec};
