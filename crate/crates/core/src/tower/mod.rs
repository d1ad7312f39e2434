//! The tower of double covers: the curve `D`, its cover `E`, the K3
//! surface `T` and the projected surface `T'`, each with a parametrization
//! through which every equation is checked.

pub mod branch;
pub mod cover;
pub mod curve;
pub mod k3;
pub mod nodes;
pub mod presentation;
pub mod projection;

pub use branch::{BranchData, BranchKind};
pub use cover::{CoverAlgebra, NormalForm};
pub use curve::{construct_curve, construct_e};
pub use k3::{construct_k3, construct_k3_with, verify_parametrized_descriptions, DescriptionReport};
pub use nodes::{node_count, NodeCount};
pub use presentation::{EquationCheck, PresentationReport, VarietyPresentation};
pub use projection::{project_t, TprimeParams};
