//! Counting the intersection points of the two branch curves on P^1 x P^1.

use num_traits::Zero;
use serde::Serialize;

use super::branch::{BranchData, BranchKind};
use crate::algebra::{GaussianRational, MultiPoly, UniPoly};
use crate::error::{Error, Result};

/// Intersection number of curves of bidegree (3,1) and (1,3).
pub const EXPECTED_NODES: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeCount {
    /// Distinct common zeros of `f` and `g`.
    pub points: usize,
    /// Points with `s2 != 0`, read from the resultant.
    pub finite: usize,
    /// Points on the fibre `s2 = 0`.
    pub at_infinity: usize,
    pub resultant_degree: usize,
    pub resultant_squarefree: bool,
    /// All intersections are transverse, i.e. there are exactly ten points.
    pub transversal: bool,
}

/// Coefficients of a bihomogeneous form as polynomials in `x = s1/s2`,
/// indexed by the exponent of `t1`.
fn fibre_coefficients(p: &MultiPoly, t_degree: usize) -> Vec<UniPoly> {
    let mut coeffs = vec![Vec::<GaussianRational>::new(); t_degree + 1];
    for (m, c) in p.terms() {
        let e = m.exponents();
        let (a, k) = (e[0] as usize, e[2] as usize);
        let slot = &mut coeffs[k];
        if slot.len() <= a {
            slot.resize(a + 1, GaussianRational::zero());
        }
        slot[a] += c;
    }
    coeffs.into_iter().map(UniPoly::new).collect()
}

/// The restriction of a form to the fibre `s2 = 0`, as a binary form in `t`.
fn fibre_at_infinity(p: &MultiPoly, s_degree: u16) -> MultiPoly {
    let terms = p
        .terms()
        .filter(|(m, _)| m.exponents()[0] == s_degree)
        .map(|(m, c)| {
            let mut m = m.clone();
            m.0[0] = 0;
            (m, c.clone())
        });
    MultiPoly::from_terms(p.ctx(), terms.collect::<Vec<_>>())
}

fn distinct_root_count(p: &UniPoly) -> usize {
    match p.degree() {
        None | Some(0) => 0,
        Some(d) => d - p.gcd(&p.derivative()).degree().unwrap_or(0),
    }
}

fn squarefree_part(p: &UniPoly) -> UniPoly {
    if p.degree().unwrap_or(0) == 0 {
        return p.clone();
    }
    p.div_rem(&p.gcd(&p.derivative())).0
}

/// Counts common zeros of `f` (bidegree (3,1)) and `g` (bidegree (1,3)).
///
/// On the chart `s2 = 1` the resultant in `t` is taken with formal leading
/// coefficients, so its roots also record points with `t2 = 0`. The fibre
/// `s2 = 0` is handled by a gcd of binary forms.
pub fn node_count(branch: &BranchData) -> Result<NodeCount> {
    if branch.kind() != BranchKind::K3 {
        return Err(Error::Contract("node count needs K3 branch data".into()));
    }
    let (f, g) = (branch.f(), branch.g());
    let fc = fibre_coefficients(f, 1);
    let gc = fibre_coefficients(g, 3);
    let (a, b) = (&fc[1], &fc[0]);
    if a.gcd(b).degree().unwrap_or(0) > 0 || (a.is_zero() && b.is_zero()) {
        return Err(Error::NonGeneric(format!(
            "f = {f} contains a whole fibre s1/s2 = const"
        )));
    }
    // Res_t(A t1 + B t2, sum g_k t1^k t2^(3-k)) = sum g_k (-B)^k A^(3-k)
    let minus_b = UniPoly::zero().sub(b);
    let mut res = UniPoly::zero();
    for (k, gk) in gc.iter().enumerate() {
        let mut term = gk.clone();
        for _ in 0..k {
            term = term.mul(&minus_b);
        }
        for _ in k..3 {
            term = term.mul(a);
        }
        res = res.add(&term);
    }
    if res.is_zero() {
        return Err(Error::NonGeneric(format!(
            "resultant of f = {f} and g = {g} vanishes identically"
        )));
    }
    let finite = distinct_root_count(&res);

    let f_inf = fibre_at_infinity(f, 3);
    let g_inf = fibre_at_infinity(g, 1);
    if f_inf.is_zero() || g_inf.is_zero() {
        return Err(Error::NonGeneric(
            "a branch curve contains the fibre s2 = 0".into(),
        ));
    }
    let (fa, f_mult) = UniPoly::from_binary_form(&f_inf, 2, 3)?;
    let (ga, g_mult) = UniPoly::from_binary_form(&g_inf, 2, 3)?;
    let common = squarefree_part(&fa).gcd(&squarefree_part(&ga));
    let at_infinity = common.degree().unwrap_or(0) + usize::from(f_mult > 0 && g_mult > 0);

    let points = finite + at_infinity;
    Ok(NodeCount {
        points,
        finite,
        at_infinity,
        resultant_degree: res.degree().unwrap_or(0),
        resultant_squarefree: res.is_squarefree(),
        transversal: points == EXPECTED_NODES,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, RingMap};
    use crate::tower::branch::k3_base;

    fn branch(f: &str, g: &str) -> BranchData {
        let base = k3_base();
        BranchData::k3(&parse_poly(f, &base).unwrap(), &parse_poly(g, &base).unwrap()).unwrap()
    }

    #[test]
    fn generic_branch_has_ten_nodes() {
        for seed in 0..3 {
            let n = node_count(&BranchData::random_k3(seed)).unwrap();
            assert_eq!(n.points, 10, "{n:?}");
            assert!(n.transversal && n.resultant_squarefree);
        }
    }

    #[test]
    fn shared_components_are_non_generic() {
        let b = branch("s1^3*t1", "s1*t1^3");
        assert!(matches!(node_count(&b), Err(Error::NonGeneric(_))));
    }

    #[test]
    fn points_at_infinity_are_counted() {
        // both curves pass through s2 = 0, t2 = 0
        let b = branch(
            "s1^2*s2*t1 + 2*s2^3*t1 + s1^3*t2 - s1*s2^2*t2",
            "s2*t1^3 + 3*s1*t1^2*t2 - s1*t2^3 + 5*s2*t2^3",
        );
        let n = node_count(&b).unwrap();
        assert!(n.at_infinity >= 1);
        let base = k3_base();
        let swap = RingMap::from_text(&base, &base, &[("s1", "s2"), ("s2", "s1"), ("t1", "t2"), ("t2", "t1")]).unwrap();
        let swapped = BranchData::k3(&swap.substitute(b.f()).unwrap(), &swap.substitute(b.g()).unwrap()).unwrap();
        assert_eq!(node_count(&swapped).unwrap().points, n.points);
    }
}
