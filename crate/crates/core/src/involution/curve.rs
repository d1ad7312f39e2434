//! The order-4 action on `E_{4,4}` and its descent to `D`.

use num_traits::Zero;
use serde::Serialize;

use super::spec::{equivariance_failures, DeclaredSquare, InvolutionSpec};
use crate::algebra::{GaussianRational, MultiPoly, PolyMatrix, UniPoly};
use crate::error::Result;
use crate::rendering::RenderTarget;
use crate::tower::branch::curve_base;
use crate::tower::curve::{curve_ambient, curve_cover_ring, curve_matrix};
use crate::tower::{construct_curve, BranchData};

/// `s1 -> i s1`, `s2 -> -i s2`, `u -> i v`, `v -> i u` on P(1, 1, 2, 2).
pub fn sigma_e() -> InvolutionSpec {
    InvolutionSpec::from_text(
        "sigma",
        &curve_cover_ring(),
        &[("s1", "i*s1"), ("s2", "-i*s2"), ("u", "i*v"), ("v", "i*u")],
        DeclaredSquare::Negation,
    )
    .unwrap()
}

pub fn tau_e() -> InvolutionSpec {
    InvolutionSpec::negation(&curve_cover_ring())
}

/// The induced action on the ambient of `D`.
pub fn sigma_d() -> InvolutionSpec {
    InvolutionSpec::from_text(
        "sigma",
        &curve_ambient(),
        &[
            ("y1", "-y1"),
            ("y3", "-y3"),
            ("z1", "-z3"),
            ("z2", "z4"),
            ("z3", "-z1"),
            ("z4", "z2"),
            ("t", "-t"),
        ],
        DeclaredSquare::Identity,
    )
    .unwrap()
}

/// `f2 = a1 y1^2 + a2 y1 y2 + a3 y1 y3 + a4 y2^2 + a5 y2 y3 + a6 y3^2` and
/// `g2`, the same with the signs of `a1, a3, a4, a6` flipped.
pub fn curve_quadrics(alpha: &[GaussianRational; 6]) -> (MultiPoly, MultiPoly) {
    let ctx = curve_ambient();
    let v = |n: &str| MultiPoly::var(&ctx, n).unwrap();
    let (y1, y2, y3) = (v("y1"), v("y2"), v("y3"));
    let monos = [&y1 * &y1, &y1 * &y2, &y1 * &y3, &y2 * &y2, &y2 * &y3, &y3 * &y3];
    let flip = [true, false, true, true, false, true];
    let mut f2 = MultiPoly::zero(&ctx);
    let mut g2 = MultiPoly::zero(&ctx);
    for k in 0..6 {
        f2 += &monos[k].scale(&alpha[k]);
        let c = if flip[k] { -alpha[k].clone() } else { alpha[k].clone() };
        g2 += &monos[k].scale(&c);
    }
    (f2, g2)
}

/// A point of `E` with `sigma'(p) = mu p` for `sigma'` one of `sigma`,
/// `sigma tau`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveFixedPoint {
    pub map: String,
    /// `(s1, s2)`; `u`, `v` are determined up to the stated kernel.
    pub s: [GaussianRational; 2],
    pub mu: GaussianRational,
    pub uv_kernel_dimension: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurveInvolutionReport {
    pub sigma_squared_is_tau: bool,
    pub tau_squared_is_identity: bool,
    /// `sigma(u^2 - f4) = -(v^2 - g4)`.
    pub preserves_e: bool,
    /// `g2` is the sign flip of `f2` under `sigma`.
    pub g2_sign_flip: bool,
    /// The transformed 4x4 matrix equals the expected signed swap.
    pub matrix_transform: bool,
    pub preserves_d: bool,
    /// The parametrization of `D` intertwines the two actions.
    pub equivariant: bool,
    pub fixed_points: Vec<CurveFixedPoint>,
}

impl CurveInvolutionReport {
    pub fn identities_hold(&self) -> bool {
        self.sigma_squared_is_tau
            && self.tau_squared_is_identity
            && self.preserves_e
            && self.g2_sign_flip
            && self.matrix_transform
            && self.preserves_d
            && self.equivariant
    }

    pub fn passed(&self) -> bool {
        self.identities_hold() && self.fixed_points.is_empty()
    }
}

fn transformed_matrix(f2: &MultiPoly, g2: &MultiPoly) -> Result<PolyMatrix> {
    let ctx = f2.ctx().clone();
    let v = |n: &str| MultiPoly::var(&ctx, n);
    let (y1, y2, y3) = (v("y1")?, v("y2")?, v("y3")?);
    let (z1, z2, z3, z4, t) = (v("z1")?, v("z2")?, v("z3")?, v("z4")?, v("t")?);
    PolyMatrix::from_rows(
        &ctx,
        vec![
            vec![-&y1, y2.clone(), -&z3, -&z1],
            vec![y2, -&y3, z4.clone(), z2.clone()],
            vec![-&z3, z4, -g2, -&t],
            vec![-&z1, z2, -&t, -f2],
        ],
    )
}

/// Points of `E` fixed by `spec`, which must scale `s1`, `s2` diagonally and
/// act linearly on `(u, v)`.
fn fixed_points_of(spec: &InvolutionSpec, f4: &MultiPoly, g4: &MultiPoly) -> Vec<CurveFixedPoint> {
    let (c1, _) = spec.image_of(0);
    let (c2, _) = spec.image_of(1);
    // sigma(p)_{u,v} = K (u, v)
    let mut k = [[GaussianRational::zero(), GaussianRational::zero()], [
        GaussianRational::zero(),
        GaussianRational::zero(),
    ]];
    for row in 0..2 {
        let (c, to) = spec.image_of(2 + row);
        k[row][to - 2] = c.clone();
    }
    let one = GaussianRational::from_integer(1);
    let zero = GaussianRational::zero();
    let mut strata: Vec<([GaussianRational; 2], GaussianRational)> = Vec::new();
    if c1 == c2 {
        // every s is an eigenvector; only common zeros of f4, g4 with u = v = 0
        // can be fixed
        if let Some(roots) = common_roots(f4, g4) {
            strata.extend(roots.into_iter().map(|s| (s, c1.clone())));
        }
    } else {
        strata.push(([one.clone(), zero.clone()], c1.clone()));
        strata.push(([zero.clone(), one.clone()], c2.clone()));
    }
    let mut out = Vec::new();
    for (s, mu) in strata {
        let mu2 = &mu * &mu;
        let m = [
            [&k[0][0] - &mu2, k[0][1].clone()],
            [k[1][0].clone(), &k[1][1] - &mu2],
        ];
        let fv = f4.evaluate(&s).unwrap();
        let gv = g4.evaluate(&s).unwrap();
        let rank = if m.iter().flatten().all(Zero::is_zero) {
            0
        } else if (&(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])).is_zero() {
            1
        } else {
            2
        };
        let fixed = match rank {
            2 => fv.is_zero() && gv.is_zero(),
            1 => {
                let (ku, kv) = if m[0].iter().all(Zero::is_zero) {
                    (m[1][1].clone(), -m[1][0].clone())
                } else {
                    (m[0][1].clone(), -m[0][0].clone())
                };
                &fv * &(&kv * &kv) == &gv * &(&ku * &ku)
            }
            _ => true,
        };
        if fixed {
            out.push(CurveFixedPoint {
                map: spec.name().to_string(),
                s,
                mu,
                uv_kernel_dimension: 2 - rank,
            });
        }
    }
    out
}

fn common_roots(f4: &MultiPoly, g4: &MultiPoly) -> Option<Vec<[GaussianRational; 2]>> {
    let (f, fi) = UniPoly::from_binary_form(f4, 0, 1).ok()?;
    let (g, gi) = UniPoly::from_binary_form(g4, 0, 1).ok()?;
    let one = GaussianRational::from_integer(1);
    let mut out: Vec<[GaussianRational; 2]> =
        f.gcd(&g).roots_of_low_degree().into_iter().map(|r| [r, one.clone()]).collect();
    if fi > 0 && gi > 0 {
        out.push([one, GaussianRational::zero()]);
    }
    Some(out)
}

/// Checks the action on `E` and `D` for the quadric coefficients `alpha`.
/// Fixed points of `sigma` and `sigma tau` are listed rather than rejected.
pub fn check_curve_involution(alpha: &[GaussianRational; 6]) -> Result<CurveInvolutionReport> {
    let sigma = sigma_e();
    let tau = tau_e();
    let (f2, g2) = curve_quadrics(alpha);
    let ambient = curve_ambient();
    let veronese = RenderTarget::veronese(&curve_base(), ["s1", "s2"], &ambient, ["y1", "y2", "y3"])?;
    let f4 = veronese.pullback(&f2)?;
    let g4 = veronese.pullback(&g2)?;
    let ring = curve_cover_ring();
    let u = MultiPoly::var(&ring, "u")?;
    let v = MultiPoly::var(&ring, "v")?;
    let (fe, ge) = (f4.embed(&ring)?, g4.embed(&ring)?);
    let preserves_e = sigma.act(&(&(&u * &u) - &fe))? == -&(&(&v * &v) - &ge);

    let sd = sigma_d();
    let g2_sign_flip = sd.act(&f2)? == -&g2 && sd.act(&g2)? == -&f2;
    let m = curve_matrix(&f2, &g2)?;
    let expected = transformed_matrix(&f2, &g2)?;
    let mut matrix_transform = true;
    for r in 0..4 {
        for c in 0..4 {
            matrix_transform &= sd.act(m.get(r, c))? == *expected.get(r, c);
        }
    }

    let mut preserves_d = false;
    let mut equivariant = false;
    if !f4.is_zero() && !g4.is_zero() {
        let d = construct_curve(&BranchData::curve(&f4, &g4)?)?;
        preserves_d = true;
        for e in &d.equations {
            preserves_d &= d.pullback_vanishes(&sd.act(e)?)?;
        }
        equivariant = equivariance_failures(&d.parametrization, &sd, &sigma)?.is_empty();
    }

    let mut fixed_points = fixed_points_of(&sigma, &f4, &g4);
    fixed_points.extend(fixed_points_of(&sigma.compose(&tau)?, &f4, &g4));
    Ok(CurveInvolutionReport {
        sigma_squared_is_tau: sigma.compose(&sigma)?.same_action(&tau),
        tau_squared_is_identity: tau.compose(&tau)?.same_action(&InvolutionSpec::identity(&ring)),
        preserves_e,
        g2_sign_flip,
        matrix_transform,
        preserves_d,
        equivariant,
        fixed_points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;

    fn alphas(seed: u64) -> [GaussianRational; 6] {
        let mut rng = Sampler::new(seed);
        std::array::from_fn(|_| rng.nonzero_real())
    }

    #[test]
    fn generic_quadrics_have_no_fixed_points() {
        for seed in 0..3 {
            let r = check_curve_involution(&alphas(seed)).unwrap();
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn vanishing_alpha1_gives_a_fixed_point() {
        let mut a = alphas(7);
        a[0] = GaussianRational::zero();
        let r = check_curve_involution(&a).unwrap();
        assert!(r.identities_hold());
        let one = GaussianRational::from_integer(1);
        assert!(!r.fixed_points.is_empty());
        assert!(r.fixed_points.iter().all(|p| p.s == [one.clone(), GaussianRational::zero()]));
        assert!(r.fixed_points.iter().any(|p| p.mu == GaussianRational::i()));
    }

    #[test]
    fn vanishing_alpha6_gives_the_other_stratum() {
        let mut a = alphas(8);
        a[5] = GaussianRational::zero();
        let r = check_curve_involution(&a).unwrap();
        assert!(r.fixed_points.iter().all(|p| p.s[0].is_zero()));
        assert_eq!(r.fixed_points.len(), 2);
    }

    #[test]
    fn tau_fixes_only_common_branch_points() {
        let ctx = curve_base();
        let f = crate::algebra::parse_poly("s1*(s1 - s2)^3", &ctx).unwrap();
        let g = crate::algebra::parse_poly("s1*(s1 + s2)^3", &ctx).unwrap();
        let pts = fixed_points_of(&tau_e(), &f, &g);
        assert_eq!(pts.len(), 1);
        assert_eq!(pts[0].s[0], GaussianRational::zero());
    }
}
