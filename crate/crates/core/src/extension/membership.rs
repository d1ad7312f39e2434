//! Deciding whether an element of `M` lies in `R + R z1 + R z2` by an exact
//! linear solve over bounded-degree coefficients.
//!
//! Only the first three columns of `B` carry unknowns: the columns of `A`
//! map to zero in `M`, so their coefficients would only enlarge the
//! nullspace.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::data::ExtensionData;
use super::maps::{column_images, matrix_b, SyzygyVector, B_SHIFTS};
use super::rings::ExtensionRings;
use crate::algebra::linsolve::canonical_representative;
use crate::algebra::poly::monomials_of_degree;
use crate::algebra::{GaussianRational, LinearSolution, Monomial, MultiPoly, SparseSystem};
use crate::error::{Error, Result};

/// Columns of `B` that receive unknown coefficients.
const ACTIVE_COLUMNS: [usize; 3] = [0, 1, 2];
/// Indices of `y1, y2, y3` in `R`.
const Y_VARS: [usize; 3] = [4, 5, 6];

/// Which coefficients the solver may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DegreeBound {
    /// Every monomial of `R` of the degree forced by the target.
    Natural,
    /// Only monomials of degree at most `k` in `y1, y2, y3`.
    YDegreeCap(u32),
}

impl fmt::Display for DegreeBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeBound::Natural => write!(f, "natural"),
            DegreeBound::YDegreeCap(k) => write!(f, "y-degree <= {k}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MembershipSolution {
    pub vector: SyzygyVector,
    /// Coefficients over the problem's unknowns.
    pub coordinates: Vec<GaussianRational>,
    pub nullspace: Vec<Vec<GaussianRational>>,
}

#[derive(Debug, Clone)]
pub enum MembershipOutcome {
    Solved(MembershipSolution),
    /// No solution with the natural bound: the target is not in the submodule.
    Inconsistent,
    /// No solution within a capped bound; a larger bound might succeed.
    BoundExhausted(DegreeBound),
}

impl MembershipOutcome {
    pub fn is_solved(&self) -> bool {
        matches!(self, MembershipOutcome::Solved(_))
    }

    pub fn solution(&self) -> Option<&MembershipSolution> {
        match self {
            MembershipOutcome::Solved(s) => Some(s),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            MembershipOutcome::Solved(_) => "solved",
            MembershipOutcome::Inconsistent => "inconsistent",
            MembershipOutcome::BoundExhausted(_) => "bound exhausted",
        }
    }
}

/// The linear system for targets of one degree, reusable across targets.
pub struct MembershipProblem {
    data: ExtensionData,
    degree: u32,
    bound: DegreeBound,
    unknowns: Vec<(usize, Monomial)>,
    /// For each row monomial of `M`, the unknowns contributing to it.
    rows: BTreeMap<Monomial, Vec<(usize, GaussianRational)>>,
}

fn y_degree(m: &Monomial) -> u32 {
    Y_VARS.iter().map(|&i| m.exponents()[i] as u32).sum()
}

impl MembershipProblem {
    pub fn new(data: &ExtensionData, degree: u32, bound: DegreeBound) -> Result<Self> {
        if data.is_symbolic() {
            return Err(Error::Contract("membership needs numeric alpha, beta".into()));
        }
        let rings = data.rings();
        let r_vars: Vec<usize> = (0..rings.r.len()).collect();
        let cols = column_images(rings, &matrix_b(data))?;
        let map = rings.phi0();
        let mut unknowns = Vec::new();
        let mut rows: BTreeMap<Monomial, Vec<(usize, GaussianRational)>> = BTreeMap::new();
        for &c in &ACTIVE_COLUMNS {
            let Some(d) = degree.checked_sub(B_SHIFTS[c]) else { continue };
            for m in monomials_of_degree(&rings.r, &r_vars, d) {
                if let DegreeBound::YDegreeCap(k) = bound {
                    if y_degree(&m) > k {
                        continue;
                    }
                }
                let mono = MultiPoly::monomial(&rings.r, m.clone(), GaussianRational::from_integer(1));
                let image = &map.substitute(&mono)? * &cols[c];
                let idx = unknowns.len();
                for (rm, coeff) in image.terms() {
                    rows.entry(rm.clone()).or_default().push((idx, coeff.clone()));
                }
                unknowns.push((c, m));
            }
        }
        Ok(Self {
            data: data.clone(),
            degree,
            bound,
            unknowns,
            rows,
        })
    }

    pub fn unknown_count(&self) -> usize {
        self.unknowns.len()
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn bound(&self) -> DegreeBound {
        self.bound
    }

    pub fn solve(&self, target: &MultiPoly) -> Result<MembershipOutcome> {
        let rings = self.data.rings();
        let target = target.embed(&rings.m)?;
        match target.homogeneity()?.degree() {
            Some(d) if d != self.degree as i64 => {
                return Err(Error::Contract(format!(
                    "target has degree {d}, the system was built for degree {}",
                    self.degree
                )))
            }
            None if !target.is_zero() => {
                return Err(Error::Contract("membership target is not homogeneous".into()))
            }
            _ => {}
        }
        let mut sys = SparseSystem::new(self.unknowns.len());
        for (m, entries) in &self.rows {
            sys.push_row(entries.clone(), target.coefficient(m))?;
        }
        for (m, c) in target.terms() {
            if !self.rows.contains_key(m) {
                sys.push_row(Vec::new(), c.clone())?;
            }
        }
        let (x, nullspace) = match sys.solve() {
            LinearSolution::Inconsistent => {
                return Ok(match self.bound {
                    DegreeBound::Natural => MembershipOutcome::Inconsistent,
                    capped => MembershipOutcome::BoundExhausted(capped),
                })
            }
            LinearSolution::Unique(x) => (x, Vec::new()),
            LinearSolution::Underdetermined { particular, nullspace } => (particular, nullspace),
        };
        let vector = self.vector(&x);
        if vector.image(&self.data)? != target {
            return Err(Error::Contract("membership solution failed re-substitution".into()));
        }
        Ok(MembershipOutcome::Solved(MembershipSolution {
            vector,
            coordinates: x,
            nullspace,
        }))
    }

    /// The syzygy vector with the given coefficients.
    pub fn vector(&self, x: &[GaussianRational]) -> SyzygyVector {
        let r = &self.data.rings().r;
        let mut v = SyzygyVector::zero(self.data.rings());
        for ((c, m), coeff) in self.unknowns.iter().zip(x) {
            if !num_traits::Zero::is_zero(coeff) {
                v.components[*c] += &MultiPoly::monomial(r, m.clone(), coeff.clone());
            }
        }
        v
    }

    /// Coefficients of a vector over the unknowns; fails if it uses a
    /// column or monomial outside the problem.
    pub fn coordinates(&self, v: &SyzygyVector) -> Result<Vec<GaussianRational>> {
        let r = &self.data.rings().r;
        let index: BTreeMap<(usize, &Monomial), usize> =
            self.unknowns.iter().enumerate().map(|(i, (c, m))| ((*c, m), i)).collect();
        let mut x = vec![GaussianRational::from_integer(0); self.unknowns.len()];
        for (c, comp) in v.components.iter().enumerate() {
            for (m, coeff) in comp.embed(r)?.terms() {
                let Some(&i) = index.get(&(c, m)) else {
                    return Err(Error::Contract(format!(
                        "component {} uses {} outside the bound",
                        c + 1,
                        m.render(r)
                    )));
                };
                x[i] = coeff.clone();
            }
        }
        Ok(x)
    }

    /// True when `other` differs from the solution by a nullspace element,
    /// compared through canonical representatives.
    pub fn agrees(&self, solution: &MembershipSolution, other: &SyzygyVector) -> Result<bool> {
        let y = self.coordinates(other)?;
        Ok(canonical_representative(&solution.nullspace, &solution.coordinates)
            == canonical_representative(&solution.nullspace, &y))
    }
}

/// One-shot membership test of a homogeneous target of `M`.
pub fn solve_membership(
    data: &ExtensionData,
    target: &MultiPoly,
    bound: DegreeBound,
) -> Result<MembershipOutcome> {
    let rings: &ExtensionRings = data.rings();
    let target = target.embed(&rings.m)?;
    let Some(degree) = target.homogeneity()?.degree() else {
        if target.is_zero() {
            return Ok(MembershipOutcome::Solved(MembershipSolution {
                vector: SyzygyVector::zero(rings),
                coordinates: Vec::new(),
                nullspace: Vec::new(),
            }));
        }
        return Err(Error::Contract("membership target is not homogeneous".into()));
    };
    MembershipProblem::new(data, degree as u32, bound)?.solve(&target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extension::residual::{closed_form_eta, closed_form_xi, residuals};

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn recovers_xi_and_eta() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        let (k, l) = residuals(&data).unwrap();
        let problem = MembershipProblem::new(&data, 6, DegreeBound::Natural).unwrap();
        assert!(problem.row_count() <= 462);
        for (res, closed) in [(k, closed_form_xi(&data)), (l, closed_form_eta(&data))] {
            let target = res.target(data.rings()).unwrap();
            let out = problem.solve(&target).unwrap();
            let sol = out.solution().expect("solvable");
            assert!(problem.agrees(sol, &closed).unwrap());
        }
    }

    #[test]
    fn perturbed_s2_is_not_a_member() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        let bad = data.with_s(2, &(data.s(2) + &data.form("b").unwrap())).unwrap();
        let (k, _) = residuals(&bad).unwrap();
        let out = solve_membership(&bad, &k.target(bad.rings()).unwrap(), DegreeBound::Natural).unwrap();
        assert!(matches!(out, MembershipOutcome::Inconsistent));
        let capped =
            solve_membership(&bad, &k.target(bad.rings()).unwrap(), DegreeBound::YDegreeCap(0)).unwrap();
        assert!(matches!(capped, MembershipOutcome::BoundExhausted(_)));
    }

    #[test]
    fn zero_target() {
        let data = ExtensionData::standard_solution(&q("1"), &q("1"));
        let zero = MultiPoly::zero(&data.rings().m);
        let out = solve_membership(&data, &zero, DegreeBound::Natural).unwrap();
        assert!(out.solution().unwrap().vector.components.iter().all(MultiPoly::is_zero));
    }
}
