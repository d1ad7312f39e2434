//! The genus 3 curve `D` in P(2^3, 3^4, 4) and its unramified double cover
//! `E` in P(1, 1, 2, 2).

use super::branch::{BranchData, BranchKind};
use super::cover::CoverAlgebra;
use super::presentation::VarietyPresentation;
use crate::algebra::{Ctx, MultiPoly, PolyMatrix, RingMap, VariableContext};
use crate::error::{Error, Result};
use crate::rendering::RenderTarget;

/// `y1, y2, y3` of weight 2, `z1..z4` of weight 3 and `t` of weight 4.
pub fn curve_ambient() -> Ctx {
    VariableContext::graded(&[
        ("y1", 2),
        ("y2", 2),
        ("y3", 2),
        ("z1", 3),
        ("z2", 3),
        ("z3", 3),
        ("z4", 3),
        ("t", 4),
    ])
    .unwrap()
}

/// `s1, s2` of weight 1 and `u, v` of weight 2.
pub fn curve_cover_ring() -> Ctx {
    VariableContext::graded(&[("s1", 1), ("s2", 1), ("u", 2), ("v", 2)]).unwrap()
}

/// The symmetric 4x4 matrix of rank 1 with the quadrics `f2`, `g2` in the
/// lower right block.
pub fn curve_matrix(f2: &MultiPoly, g2: &MultiPoly) -> Result<PolyMatrix> {
    let ctx = f2.ctx().clone();
    let v = |n: &str| MultiPoly::var(&ctx, n);
    let (y1, y2, y3) = (v("y1")?, v("y2")?, v("y3")?);
    let (z1, z2, z3, z4, t) = (v("z1")?, v("z2")?, v("z3")?, v("z4")?, v("t")?);
    PolyMatrix::from_rows(
        &ctx,
        vec![
            vec![y1, y2.clone(), z1.clone(), z3.clone()],
            vec![y2, y3, z2.clone(), z4.clone()],
            vec![z1, z2, f2.clone(), t.clone()],
            vec![z3, z4, t, g2.embed(&ctx)?],
        ],
    )
}

/// 2x2 minors with zeros and repeats (also up to sign) removed, keeping the
/// first occurrence in row-major order.
pub fn distinct_minors(m: &PolyMatrix) -> Result<Vec<MultiPoly>> {
    let mut out: Vec<MultiPoly> = Vec::new();
    for minor in m.minors(2)? {
        let p = minor.value;
        if p.is_zero() || out.iter().any(|q| *q == p || *q == -&p) {
            continue;
        }
        out.push(p);
    }
    Ok(out)
}

fn curve_parametrization(ambient: &Ctx, cover: &Ctx) -> Result<RingMap> {
    RingMap::from_text(
        ambient,
        cover,
        &[
            ("y1", "s1^2"),
            ("y2", "s1*s2"),
            ("y3", "s2^2"),
            ("z1", "s1*u"),
            ("z2", "s2*u"),
            ("z3", "s1*v"),
            ("z4", "s2*v"),
            ("t", "u*v"),
        ],
    )
}

fn require(branch: &BranchData, kind: BranchKind) -> Result<()> {
    if branch.kind() != kind {
        return Err(Error::Contract(format!("expected {kind:?} branch data")));
    }
    Ok(())
}

/// Builds `D` from binary quartics `f4`, `g4`: all distinct 2x2 minors of
/// the curve matrix with `f2`, `g2` the Veronese renderings of `f4`, `g4`.
pub fn construct_curve(branch: &BranchData) -> Result<VarietyPresentation> {
    require(branch, BranchKind::Curve)?;
    let ambient = curve_ambient();
    let cover_ring = curve_cover_ring();
    let veronese = RenderTarget::veronese(branch.base(), ["s1", "s2"], &ambient, ["y1", "y2", "y3"])?;
    let f2 = veronese.render(branch.f())?;
    let g2 = veronese.render(branch.g())?;
    let matrix = curve_matrix(&f2, &g2)?;
    let equations = distinct_minors(&matrix)?;
    let cover = CoverAlgebra::new(
        &cover_ring,
        "u",
        "v",
        &branch.f().embed(&cover_ring)?,
        &branch.g().embed(&cover_ring)?,
    )?;
    let mut metadata = vec![
        ("f2".to_string(), f2.to_string()),
        ("g2".to_string(), g2.to_string()),
        ("raw_minors".to_string(), "36".to_string()),
        ("distinct_minors".to_string(), equations.len().to_string()),
    ];
    if let Some(sf) = branch.product_squarefree() {
        metadata.push(("branch_squarefree".into(), sf.to_string()));
    }
    Ok(VarietyPresentation {
        name: "D".into(),
        parametrization: curve_parametrization(&ambient, &cover_ring)?,
        ambient,
        equations,
        cover: Some(cover),
        metadata,
    })
}

/// Builds `E_{4,4}`: `u^2 = f4`, `v^2 = g4` in P(1, 1, 2, 2).
pub fn construct_e(branch: &BranchData) -> Result<VarietyPresentation> {
    require(branch, BranchKind::Curve)?;
    let ring = curve_cover_ring();
    let f = branch.f().embed(&ring)?;
    let g = branch.g().embed(&ring)?;
    let u = MultiPoly::var(&ring, "u")?;
    let v = MultiPoly::var(&ring, "v")?;
    let equations = vec![&u * &u - &f, &v * &v - &g];
    let cover = CoverAlgebra::new(&ring, "u", "v", &f, &g)?;
    Ok(VarietyPresentation {
        name: "E".into(),
        ambient: ring.clone(),
        equations,
        parametrization: RingMap::identity(&ring),
        cover: Some(cover),
        metadata: vec![
            ("genus".into(), "5".into()),
            ("covers".into(), "D, unramified of degree 2".into()),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_equations_vanish() {
        let d = construct_curve(&BranchData::random_curve(3)).unwrap();
        let report = d.verify().unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        assert_eq!(d.meta("raw_minors"), Some("36"));
    }

    #[test]
    fn distinct_minor_count_is_stable() {
        for seed in 0..3 {
            let d = construct_curve(&BranchData::random_curve(seed)).unwrap();
            assert_eq!(d.equations.len(), 21);
        }
    }

    #[test]
    fn e_is_a_complete_intersection() {
        let e = construct_e(&BranchData::random_curve(5)).unwrap();
        assert_eq!(e.equations.len(), 2);
        let report = e.verify().unwrap();
        assert!(report.passed());
        assert!(report.checks.iter().all(|c| c.degree == Some(4)));
    }

    #[test]
    fn wrong_degree_is_rejected() {
        let base = super::super::branch::curve_base();
        let f3 = crate::algebra::parse_poly("s1^3 + s2^3", &base).unwrap();
        let f4 = crate::algebra::parse_poly("s1^4 + s2^4", &base).unwrap();
        assert!(BranchData::curve(&f3, &f4).is_err());
    }
}
