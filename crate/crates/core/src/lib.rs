//! Exact construction and verification of a tower of hyperelliptic graded
//! rings: a genus 5 curve, a K3 double cover, a projected K3 and a Fano
//! 6-fold extension, together with Godeaux-type involutions.

pub mod algebra;
pub mod cli;
pub mod config;
pub mod error;
pub mod extension;
pub mod involution;
pub mod random;
pub mod rendering;
pub mod series;
pub mod suites;
pub mod tower;

pub use error::{Error, Result};
