//! The K3 surface `T` in P(2^4, 3^4, 4) double covering P^1 x P^1, and the
//! parametrized descriptions of `D` and `T` inside larger quotients.

use serde::Serialize;

use super::branch::{BranchData, BranchKind};
use super::cover::CoverAlgebra;
use super::curve::curve_cover_ring;
use super::presentation::VarietyPresentation;
use crate::algebra::poly::Homogeneity;
use crate::algebra::{Ctx, MultiPoly, PolyMatrix, RingMap, VariableContext};
use crate::error::{Error, Result};
use crate::rendering::{split, RenderTarget, SplitPreference};

/// `y1..y4` of weight 2, `z1..z4` of weight 3 and `t` of weight 4.
pub fn k3_ambient() -> Ctx {
    VariableContext::graded(&[
        ("y1", 2),
        ("y2", 2),
        ("y3", 2),
        ("y4", 2),
        ("z1", 3),
        ("z2", 3),
        ("z3", 3),
        ("z4", 3),
        ("t", 4),
    ])
    .unwrap()
}

/// `s1, s2, t1, t2` of weight 1 and `u, v` of weight 2. The bidegrees are
/// the weights under the two-torus acting by
/// `(l^2 s, t, l^3 u, l v)` and `(s, m^2 t, m u, m^3 v)`.
pub fn k3_cover_ring() -> Ctx {
    VariableContext::graded(&[("s1", 1), ("s2", 1), ("t1", 1), ("t2", 1), ("u", 2), ("v", 2)])
        .unwrap()
        .with_bidegrees(&[(2, 0), (2, 0), (0, 2), (0, 2), (3, 1), (1, 3)])
        .unwrap()
}

/// The 3x3 matrix of rank 1 cutting out the quotient containing `T`.
pub fn k3_matrix(ctx: &Ctx) -> Result<PolyMatrix> {
    let rows = [["y1", "y2", "z1"], ["y3", "y4", "z2"], ["z3", "z4", "t"]];
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|n| MultiPoly::var(ctx, n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMatrix::from_rows(ctx, rows)
}

fn k3_parametrization(ambient: &Ctx, cover: &Ctx) -> Result<RingMap> {
    RingMap::from_text(
        ambient,
        cover,
        &[
            ("y1", "s1*t1"),
            ("y2", "s2*t1"),
            ("y3", "s1*t2"),
            ("y4", "s2*t2"),
            ("z1", "t1*u"),
            ("z2", "t2*u"),
            ("z3", "s1*v"),
            ("z4", "s2*v"),
            ("t", "u*v"),
        ],
    )
}

/// Builds `T`: nine minors, six `z_i z_j` relations, four `z_i t` relations
/// and `t^2 = F`, in that order. `pref` decides how `t_i f` and `s_i g` are
/// split when both slots are possible.
pub fn construct_k3_with(branch: &BranchData, pref: SplitPreference) -> Result<VarietyPresentation> {
    if branch.kind() != BranchKind::K3 {
        return Err(Error::Contract("expected K3 branch data".into()));
    }
    let ambient = k3_ambient();
    let cover_ring = k3_cover_ring();
    let base = branch.base().clone();
    let segre = RenderTarget::segre(&base, ["s1", "s2"], ["t1", "t2"], &ambient, ["y1", "y2", "y3", "y4"])?;
    let var = |n: &str| MultiPoly::var(&ambient, n);
    let bvar = |n: &str| MultiPoly::var(&base, n);
    let (f, g) = (branch.f(), branch.g());

    let mut equations: Vec<MultiPoly> = k3_matrix(&ambient)?
        .minors(2)?
        .into_iter()
        .map(|m| m.value)
        .collect();

    let squares = [
        ("z1", "z1", "t1", "t1", f),
        ("z1", "z2", "t1", "t2", f),
        ("z2", "z2", "t2", "t2", f),
        ("z3", "z3", "s1", "s1", g),
        ("z3", "z4", "s1", "s2", g),
        ("z4", "z4", "s2", "s2", g),
    ];
    for (za, zb, xa, xb, h) in squares {
        let rhs = segre.render(&(&(&bvar(xa)? * &bvar(xb)?) * h))?;
        equations.push(&var(za)? * &var(zb)? - rhs);
    }

    let idx = |n: &str| base.index_of(n);
    // z1 t = t1 f v, z2 t = t2 f v split over s; z3 t = s1 g u, z4 t = s2 g u split over t
    let products = [
        ("z1", "t1", f, ("s1", "s2"), ("z3", "z4")),
        ("z2", "t2", f, ("s1", "s2"), ("z3", "z4")),
        ("z3", "s1", g, ("t1", "t2"), ("z1", "z2")),
        ("z4", "s2", g, ("t1", "t2"), ("z1", "z2")),
    ];
    let mut splits = Vec::new();
    for (z, x, h, (x1, x2), (w1, w2)) in products {
        let (q, q2) = split(h, idx(x)?, idx(x1)?, idx(x2)?, pref);
        let (rq, rq2) = (segre.render(&q)?, segre.render(&q2)?);
        splits.push((z.to_string(), rq.to_string(), rq2.to_string()));
        let rhs = &rq * &var(w1)? + &rq2 * &var(w2)?;
        equations.push(&var(z)? * &var("t")? - rhs);
    }

    let t = var("t")?;
    equations.push(&t * &t - segre.render(branch.product())?);

    let cover = CoverAlgebra::new(&cover_ring, "u", "v", &f.embed(&cover_ring)?, &g.embed(&cover_ring)?)?;
    let mut metadata = vec![
        ("f".to_string(), f.to_string()),
        ("g".to_string(), g.to_string()),
        ("split".to_string(), format!("{pref:?}")),
    ];
    for (z, q, q2) in splits {
        metadata.push((format!("{z}*t"), format!("({q}, {q2})")));
    }
    Ok(VarietyPresentation {
        name: "T".into(),
        parametrization: k3_parametrization(&ambient, &cover_ring)?,
        ambient,
        equations,
        cover: Some(cover),
        metadata,
    })
}

pub fn construct_k3(branch: &BranchData) -> Result<VarietyPresentation> {
    construct_k3_with(branch, SplitPreference::First)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoordinateBidegree {
    pub name: String,
    pub weight: u32,
    pub bidegree: (i64, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescriptionReport {
    /// Minors of the 4x4 matrix with `x1 = u^2`, `x2 = v^2` on the diagonal.
    pub veronese_minors: usize,
    pub veronese_vanish: bool,
    /// Minors of the 3x3 matrix under the two-torus parametrization.
    pub segre_minors: usize,
    pub segre_vanish: bool,
    pub coordinates: Vec<CoordinateBidegree>,
    /// Every coordinate of weight `k` has bidegree `(k, k)`.
    pub coordinates_balanced: bool,
    /// Bidegrees of `u^2` and `v^2`.
    pub branch_bidegrees: [(i64, i64); 2],
}

impl DescriptionReport {
    pub fn passed(&self) -> bool {
        self.veronese_vanish
            && self.segre_vanish
            && self.coordinates_balanced
            && self.branch_bidegrees == [(6, 2), (2, 6)]
    }
}

fn bidegree_of(p: &MultiPoly) -> Result<(i64, i64)> {
    match p.bihomogeneity()? {
        Homogeneity::Homogeneous(d) => Ok(d),
        other => Err(Error::Contract(format!("{p} is not bihomogeneous: {other:?}"))),
    }
}

/// Checks the descriptions of `D` inside a quotient of the cone over the
/// Veronese embedding of P^3, and of `T` inside a two-torus quotient.
pub fn verify_parametrized_descriptions() -> Result<DescriptionReport> {
    let ambient = VariableContext::graded(&[
        ("y1", 2),
        ("y2", 2),
        ("y3", 2),
        ("z1", 3),
        ("z2", 3),
        ("z3", 3),
        ("z4", 3),
        ("x1", 4),
        ("x2", 4),
        ("t", 4),
    ])?;
    let ring = curve_cover_ring();
    let map = RingMap::from_text(
        &ambient,
        &ring,
        &[
            ("y1", "s1^2"),
            ("y2", "s1*s2"),
            ("y3", "s2^2"),
            ("z1", "s1*u"),
            ("z2", "s2*u"),
            ("z3", "s1*v"),
            ("z4", "s2*v"),
            ("x1", "u^2"),
            ("x2", "v^2"),
            ("t", "u*v"),
        ],
    )?;
    let x1 = MultiPoly::var(&ambient, "x1")?;
    let x2 = MultiPoly::var(&ambient, "x2")?;
    let matrix = super::curve::curve_matrix(&x1, &x2)?;
    let minors = matrix.minors(2)?;
    let mut veronese_vanish = true;
    for m in &minors {
        veronese_vanish &= map.substitute(&m.value)?.is_zero();
    }

    let k3 = k3_ambient();
    let cover = k3_cover_ring();
    let param = k3_parametrization(&k3, &cover)?;
    let segre = k3_matrix(&k3)?.minors(2)?;
    let mut segre_vanish = true;
    for m in &segre {
        segre_vanish &= param.substitute(&m.value)?.is_zero();
    }
    let mut coordinates = Vec::new();
    let mut balanced = true;
    for (i, name) in k3.names().iter().enumerate() {
        let w = k3.weight(i).unwrap();
        let bidegree = bidegree_of(&param.images()[i])?;
        balanced &= bidegree == (w as i64, w as i64);
        coordinates.push(CoordinateBidegree {
            name: name.clone(),
            weight: w,
            bidegree,
        });
    }
    let u = MultiPoly::var(&cover, "u")?;
    let v = MultiPoly::var(&cover, "v")?;
    Ok(DescriptionReport {
        veronese_minors: minors.len(),
        veronese_vanish,
        segre_minors: segre.len(),
        segre_vanish,
        coordinates,
        coordinates_balanced: balanced,
        branch_bidegrees: [bidegree_of(&(&u * &u))?, bidegree_of(&(&v * &v))?],
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k3_has_twenty_vanishing_equations() {
        let t = construct_k3(&BranchData::random_k3(11)).unwrap();
        assert_eq!(t.equations.len(), 20);
        let report = t.verify().unwrap();
        assert!(report.passed(), "{:?}", report.first_failure());
        let degrees: Vec<_> = report.checks.iter().map(|c| c.degree.unwrap()).collect();
        assert_eq!(
            degrees,
            [4, 5, 5, 5, 6, 6, 5, 6, 6, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 8]
        );
    }

    #[test]
    fn split_choice_only_changes_equations_by_vanishing_terms() {
        let b = BranchData::random_k3(4);
        let first = construct_k3_with(&b, SplitPreference::First).unwrap();
        let second = construct_k3_with(&b, SplitPreference::Second).unwrap();
        for (p, q) in first.equations.iter().zip(&second.equations) {
            assert!(first.pullback_vanishes(&(p - q)).unwrap());
        }
        assert!(first.equations.iter().zip(&second.equations).any(|(p, q)| p != q));
    }

    #[test]
    fn descriptions_check_out() {
        let r = verify_parametrized_descriptions().unwrap();
        assert!(r.passed(), "{r:?}");
        assert_eq!(r.veronese_minors, 36);
        assert_eq!(r.segre_minors, 9);
        let z1 = r.coordinates.iter().find(|c| c.name == "z1").unwrap();
        assert_eq!(z1.bidegree, (3, 3));
    }
}
