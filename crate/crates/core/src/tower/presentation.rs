//! Equation lists with a parametrization through a double cover.

use serde::Serialize;

use super::cover::CoverAlgebra;
use crate::algebra::poly::Homogeneity;
use crate::algebra::{Ctx, MultiPoly, RingMap};
use crate::error::Result;

/// A projective variety given by equations in a weighted ambient ring and a
/// map from the ambient ring into a ring that parametrizes it.
#[derive(Clone)]
pub struct VarietyPresentation {
    pub name: String,
    pub ambient: Ctx,
    pub equations: Vec<MultiPoly>,
    /// Ambient coordinates in terms of the cover variables.
    pub parametrization: RingMap,
    /// Relations of the cover ring; `None` when the target is a polynomial ring.
    pub cover: Option<CoverAlgebra>,
    pub metadata: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub index: usize,
    pub equation: String,
    pub terms: usize,
    pub degree: Option<i64>,
    pub homogeneous: bool,
    pub pullback_zero: bool,
}

impl EquationCheck {
    pub fn passed(&self) -> bool {
        self.homogeneous && self.pullback_zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PresentationReport {
    pub name: String,
    pub checks: Vec<EquationCheck>,
}

impl PresentationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(EquationCheck::passed)
    }

    pub fn first_failure(&self) -> Option<&EquationCheck> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl VarietyPresentation {
    /// Pulls an ambient polynomial back and reduces it in the cover ring.
    pub fn pullback_vanishes(&self, p: &MultiPoly) -> Result<bool> {
        let image = self.parametrization.substitute(p)?;
        match &self.cover {
            Some(cover) => Ok(cover.reduce(&image)?.is_zero()),
            None => Ok(image.is_zero()),
        }
    }

    /// Checks every equation for homogeneity and pullback vanishing.
    pub fn verify(&self) -> Result<PresentationReport> {
        let mut checks = Vec::with_capacity(self.equations.len());
        for (index, eq) in self.equations.iter().enumerate() {
            let (homogeneous, degree) = if self.ambient.is_graded() {
                match eq.homogeneity()? {
                    Homogeneity::Zero => (true, None),
                    Homogeneity::Homogeneous(d) => (true, Some(d)),
                    Homogeneity::Inhomogeneous(..) => (false, None),
                }
            } else {
                (true, None)
            };
            checks.push(EquationCheck {
                index,
                equation: eq.to_string(),
                terms: eq.len(),
                degree,
                homogeneous,
                pullback_zero: self.pullback_vanishes(eq)?,
            });
        }
        Ok(PresentationReport {
            name: self.name.clone(),
            checks,
        })
    }

    pub fn weights(&self) -> Vec<(String, u32)> {
        self.ambient
            .names()
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), self.ambient.weight(i).unwrap_or(0)))
            .collect()
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}
