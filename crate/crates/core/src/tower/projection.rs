//! The projected surface `T'_{6,6}` in P(2, 2, 2, 3, 3) and the genus 2
//! curve through which the unprojection divisor passes.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::presentation::VarietyPresentation;
use crate::algebra::{Ctx, GaussianRational, MultiPoly, PolyMatrix, RingMap, VariableContext};
use crate::error::Result;

/// Scalars of the family of projected surfaces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TprimeParams {
    pub alpha: GaussianRational,
    pub beta: GaussianRational,
    pub l: [GaussianRational; 4],
    pub m: [GaussianRational; 4],
}

impl TprimeParams {
    /// The bare curves `C1`, `C2` with all `l`, `m` zero.
    pub fn bare(alpha: GaussianRational, beta: GaussianRational) -> Self {
        let z = || GaussianRational::zero();
        Self {
            alpha,
            beta,
            l: [z(), z(), z(), z()],
            m: [z(), z(), z(), z()],
        }
    }
}

/// `y1, y2, y3` of weight 2 and `z1, z2` of weight 3.
pub fn tprime_ambient() -> Ctx {
    VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2), ("z1", 3), ("z2", 3)]).unwrap()
}

/// `f = y1 + alpha*y3` and `g = beta*y1 + y3` over any ring containing `y1`, `y3`.
pub fn branch_lines(ctx: &Ctx, alpha: &MultiPoly, beta: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
    let y1 = MultiPoly::var(ctx, "y1")?;
    let y3 = MultiPoly::var(ctx, "y3")?;
    Ok((&y1 + &(alpha * &y3), &(beta * &y1) + &y3))
}

/// `Q1 = f y2^2`, `Q2 = y2^3`, `Q3 = g y2^2`, `Q4 = f g y2`.
pub fn q_forms(ctx: &Ctx, f: &MultiPoly, g: &MultiPoly) -> Result<[MultiPoly; 4]> {
    let y2 = MultiPoly::var(ctx, "y2")?;
    let y22 = &y2 * &y2;
    Ok([f * &y22, &y22 * &y2, g * &y22, &(f * g) * &y2])
}

/// `z1^2 - y1 f^2` and `z2^2 - y3 g^2`.
pub fn c_forms(ctx: &Ctx, f: &MultiPoly, g: &MultiPoly) -> Result<[MultiPoly; 2]> {
    let v = |n: &str| MultiPoly::var(ctx, n);
    let (y1, y3, z1, z2) = (v("y1")?, v("y3")?, v("z1")?, v("z2")?);
    Ok([&z1 * &z1 - &y1 * &(f * f), &z2 * &z2 - &y3 * &(g * g)])
}

/// `P^1 -> T'`: `(u, v) -> (u^2, 0, v^2, u(u^2 + alpha v^2), v(beta u^2 + v^2))`.
pub fn phi_map(ambient: &Ctx, alpha: &GaussianRational, beta: &GaussianRational) -> Result<RingMap> {
    let line = VariableContext::graded(&[("u", 1), ("v", 1)])?;
    RingMap::from_text(
        ambient,
        &line,
        &[
            ("y1", "u^2"),
            ("y2", "0"),
            ("y3", "v^2"),
            ("z1", &format!("u^3 + ({alpha})*u*v^2")),
            ("z2", &format!("({beta})*u^2*v + v^3")),
        ],
    )
}

/// `z1^2 = y1 f^2 + sum l_i Q_i` and `z2^2 = y3 g^2 + sum m_i Q_i`, written
/// as `C1 - sum l_i Q_i` and `C2 - sum m_i Q_i`.
pub fn project_t(params: &TprimeParams) -> Result<VarietyPresentation> {
    let ambient = tprime_ambient();
    let alpha = MultiPoly::constant(&ambient, params.alpha.clone());
    let beta = MultiPoly::constant(&ambient, params.beta.clone());
    let (f, g) = branch_lines(&ambient, &alpha, &beta)?;
    let q = q_forms(&ambient, &f, &g)?;
    let [mut e1, mut e2] = c_forms(&ambient, &f, &g)?;
    for i in 0..4 {
        e1 -= &(&q[i] * &params.l[i]);
        e2 -= &(&q[i] * &params.m[i]);
    }
    Ok(VarietyPresentation {
        name: "T'".into(),
        parametrization: phi_map(&ambient, &params.alpha, &params.beta)?,
        ambient,
        equations: vec![e1, e2],
        cover: None,
        metadata: vec![("contains".into(), "image of P^1 under phi".into())],
    })
}

/// The 3x3 matrix of rank 1 for `T` with the centre of projection at the
/// coordinate point of `y4`.
pub fn projection_matrix(alpha: &GaussianRational, beta: &GaussianRational) -> Result<PolyMatrix> {
    let ctx = super::k3::k3_ambient();
    let a = MultiPoly::constant(&ctx, alpha.clone());
    let b = MultiPoly::constant(&ctx, beta.clone());
    let (f, g) = branch_lines(&ctx, &a, &b)?;
    let v = |n: &str| MultiPoly::var(&ctx, n);
    PolyMatrix::from_rows(
        &ctx,
        vec![
            vec![v("y2")?, f, v("z1")?],
            vec![g, v("y4")?, v("z3")?],
            vec![v("z2")?, v("z4")?, v("t")?],
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn phi_lies_on_every_member() {
        let params = TprimeParams {
            alpha: q("2"),
            beta: q("-1/3"),
            l: [q("1"), q("i"), q("-2"), q("5/7")],
            m: [q("3"), q("0"), q("1+i"), q("-1")],
        };
        let t = project_t(&params).unwrap();
        assert!(t.verify().unwrap().passed());
    }

    #[test]
    fn specializes_to_cuspidal_pair() {
        let t = project_t(&TprimeParams::bare(q("0"), q("0"))).unwrap();
        assert_eq!(t.equations[0].to_string(), "-y1^3 + z1^2");
        assert_eq!(t.equations[1].to_string(), "-y3^3 + z2^2");
    }

    #[test]
    fn projection_matrix_minors_are_homogeneous() {
        let m = projection_matrix(&q("2"), &q("3")).unwrap();
        for minor in m.minors(2).unwrap() {
            assert!(minor.value.homogeneity().unwrap().is_homogeneous());
        }
    }
}
