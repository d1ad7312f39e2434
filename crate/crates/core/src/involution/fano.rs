//! The involution on P^5, on `T'` and on `W'` for the family `beta = alpha`,
//! and the equivariance of `Phi`.

use serde::Serialize;

use super::spec::{
    equivariance_failures, fixed_witness, fixed_witness_symbolic, DeclaredSquare, FixedWitness, InvolutionSpec,
};
use crate::algebra::{Ctx, GaussianRational, MultiPoly, RingMap, UniPoly, VariableContext};
use crate::error::{Error, Result};
use crate::extension::{build_wprime, phi, ExtensionData, ExtensionRings};
use crate::tower::projection::{phi_map, tprime_ambient};
use crate::tower::{project_t, TprimeParams, VarietyPresentation};

const ABCD_RULES: [(&str, &str); 4] = [("a", "-d"), ("b", "c"), ("c", "b"), ("d", "-a")];
const TPRIME_RULES: [(&str, &str); 5] = [("y1", "y3"), ("y2", "-y2"), ("y3", "y1"), ("z1", "-z2"), ("z2", "-z1")];

/// Weights of `a, b, c, d, y1, y2, y3, z1, z2`.
const S_WEIGHTS: [u32; 9] = [1, 1, 1, 1, 2, 2, 2, 3, 3];
const P5_WEIGHTS: [u32; 6] = [1; 6];

/// `u -> -v`, `v -> -u`, `a -> -d`, `b -> c`, `c -> b`, `d -> -a` on `M`.
pub fn sigma_p5(rings: &ExtensionRings) -> InvolutionSpec {
    let mut rules = ABCD_RULES.to_vec();
    rules.extend([("u", "-v"), ("v", "-u")]);
    InvolutionSpec::from_text("sigma", &rings.m, &rules, DeclaredSquare::Identity).unwrap()
}

/// `y1 <-> y3`, `y2 -> -y2`, `z1 -> -z2`, `z2 -> -z1` on P(2, 2, 2, 3, 3).
pub fn sigma_tprime() -> InvolutionSpec {
    InvolutionSpec::from_text("sigma", &tprime_ambient(), &TPRIME_RULES, DeclaredSquare::Identity).unwrap()
}

/// The action on `T'` extended to `a, b, c, d` by the rule on P^5.
pub fn sigma_wprime(rings: &ExtensionRings) -> InvolutionSpec {
    let mut rules = ABCD_RULES.to_vec();
    rules.extend(TPRIME_RULES);
    InvolutionSpec::from_text("sigma", &rings.s, &rules, DeclaredSquare::Identity).unwrap()
}

fn require_equivariant(data: &ExtensionData) -> Result<()> {
    if data.alpha() != data.beta() {
        return Err(Error::Domain(format!(
            "the involution needs beta = alpha, got alpha = {}, beta = {}",
            data.alpha(),
            data.beta()
        )));
    }
    Ok(())
}

/// `Phi` with `f1 = u(f + alpha(a^2 + alpha d^2)) + (1 - alpha^2) a u v + alpha(alpha^2 - 1) a d v`
/// and the mirrored `f2`, written directly rather than through the corrections.
pub fn equivariant_phi(data: &ExtensionData) -> Result<RingMap> {
    require_equivariant(data)?;
    let rings = data.rings();
    let c = &rings.cover;
    let v = |n: &str| ExtensionRings::var(c, n);
    let (a, d, u, w, y1, y3) = (v("a"), v("d"), v("u"), v("v"), v("y1"), v("y3"));
    let al = data.alpha().embed(c)?;
    let k = &MultiPoly::one(c) - &(&al * &al);
    let alk = &al * &k;
    let f = &y1 + &(&al * &y3);
    let g = &(&al * &y1) + &y3;
    let (aa, dd, ad, uv) = (&a * &a, &d * &d, &a * &d, &u * &w);
    let f1 = &(&(&u * &(&f + &(&al * &(&aa + &(&al * &dd))))) + &(&(&k * &a) * &uv)) - &(&(&alk * &ad) * &w);
    let f2 = &(&(&w * &(&g + &(&al * &(&(&al * &aa) + &dd)))) + &(&(&k * &d) * &uv)) - &(&(&alk * &ad) * &u);
    with_z_images(data, &f1, &f2)
}

/// `Phi` of `data` with the images of `z1`, `z2` replaced by elements of the
/// cover ring.
pub fn with_z_images(data: &ExtensionData, z1: &MultiPoly, z2: &MultiPoly) -> Result<RingMap> {
    let rings = data.rings();
    let to_m = rings.cover_to_m();
    let base = phi(data)?;
    let mut images = base.images().to_vec();
    images[rings.s.index_of("z1")?] = to_m.substitute(&z1.embed(&rings.cover)?)?;
    images[rings.s.index_of("z2")?] = to_m.substitute(&z2.embed(&rings.cover)?)?;
    RingMap::new(&rings.s, &rings.m, images)
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiEquivarianceReport {
    pub symbolic: bool,
    /// The direct formula for `f1`, `f2` agrees with the corrections.
    pub matches_corrections: bool,
    /// Coordinates of `S` where `Phi(sigma x) != sigma Phi(x)`.
    pub failures: Vec<String>,
}

impl PhiEquivarianceReport {
    pub fn passed(&self) -> bool {
        self.matches_corrections && self.failures.is_empty()
    }
}

/// Coordinates where `map` fails to intertwine the actions on `S` and `M`.
pub fn phi_equivariance_failures(rings: &ExtensionRings, map: &RingMap) -> Result<Vec<String>> {
    equivariance_failures(map, &sigma_wprime(rings), &sigma_p5(rings))
}

/// Checks `Phi o sigma_target = sigma_P5 o Phi` coordinate by coordinate,
/// identically in `alpha` when `data` is symbolic.
pub fn check_phi_equivariance(data: &ExtensionData) -> Result<PhiEquivarianceReport> {
    let map = equivariant_phi(data)?;
    let standard = phi(data)?;
    Ok(PhiEquivarianceReport {
        symbolic: data.is_symbolic(),
        matches_corrections: map.images() == standard.images(),
        failures: phi_equivariance_failures(data.rings(), &map)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PlaneCheck {
    pub plane: String,
    /// Scalar of the generic point of the plane under the action on P^5.
    pub p5_witness: Option<FixedWitness>,
    /// Scalar of its image under `Phi` in the weighted ambient of `W'`.
    pub image_witness: Option<FixedWitness>,
}

impl PlaneCheck {
    pub fn passed(&self) -> bool {
        self.p5_witness.is_some() && self.image_witness.is_some()
    }
}

/// The planes `u = v, a = d, b = -c` and `u = -v, a = -d, b = c`.
pub const FIXED_PLANES: [(&str, [(&str, &str); 3]); 2] = [
    ("u = v, a = d, b = -c", [("v", "u"), ("d", "a"), ("c", "-b")]),
    ("u = -v, a = -d, b = c", [("v", "-u"), ("d", "-a"), ("c", "b")]),
];

/// Fixedness of a plane of P^5 given by substitution rules, tested on its
/// generic point and on the generic point of its image.
pub fn plane_check(data: &ExtensionData, name: &str, rules: &[(&str, &str)]) -> Result<PlaneCheck> {
    require_equivariant(data)?;
    let rings = data.rings();
    let restrict = RingMap::from_text(&rings.m, &rings.m, rules)?;
    let point: Vec<MultiPoly> = restrict.images()[..P5_WEIGHTS.len()].to_vec();
    let p5_witness = fixed_witness_symbolic(&sigma_p5(rings), &P5_WEIGHTS, &point)?;
    let map = equivariant_phi(data)?;
    let image = map.images()[..S_WEIGHTS.len()]
        .iter()
        .map(|p| restrict.substitute(p))
        .collect::<Result<Vec<_>>>()?;
    let image_witness = fixed_witness_symbolic(&sigma_wprime(rings), &S_WEIGHTS, &image)?;
    Ok(PlaneCheck {
        plane: name.to_string(),
        p5_witness,
        image_witness,
    })
}

/// The fixed locus of `sigma` on `T'` off the curve `phi(P^1)`: the line
/// `z1 = z2 = y1 + y3 = 0` cut by a binary cubic.
#[derive(Debug, Clone, Serialize)]
pub struct IsolatedFixedPoints {
    pub cubic: String,
    /// On the line the two equations of `T'` restrict to `c` and `-c`.
    pub equations_agree: bool,
    /// Every point of the line is fixed.
    pub line_fixed: bool,
    /// Distinct points cut out by the cubic; `None` when it vanishes.
    pub count: Option<usize>,
}

impl IsolatedFixedPoints {
    pub fn passed(&self) -> bool {
        self.equations_agree && self.line_fixed && self.count == Some(3)
    }
}

fn distinct_roots(form: &MultiPoly) -> Result<Option<usize>> {
    if form.is_zero() {
        return Ok(None);
    }
    let (aff, at_inf) = UniPoly::from_binary_form(form, 0, 1)?;
    let d = aff.degree().unwrap_or(0);
    let repeated = aff.gcd(&aff.derivative()).degree().unwrap_or(0);
    Ok(Some(d - repeated + usize::from(at_inf > 0)))
}

pub fn isolated_fixed_points(tprime: &VarietyPresentation) -> Result<IsolatedFixedPoints> {
    let line: Ctx = VariableContext::ungraded(&["y1", "y2"])?;
    let restrict = RingMap::from_text(
        &tprime.ambient,
        &line,
        &[("y3", "-y1"), ("z1", "0"), ("z2", "0")],
    )?;
    let e1 = restrict.substitute(&tprime.equations[0])?;
    let e2 = restrict.substitute(&tprime.equations[1])?;
    let line_fixed = fixed_witness_symbolic(&sigma_tprime(), &[2, 2, 2, 3, 3], restrict.images())?.is_some();
    Ok(IsolatedFixedPoints {
        cubic: e1.to_string(),
        equations_agree: e2 == -&e1,
        line_fixed,
        count: distinct_roots(&e1)?,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct FixedPlanesReport {
    pub planes: Vec<PlaneCheck>,
    /// Scalars of `phi(1, 1)` and `phi(-1, 1)` on `T'`.
    pub curve_points: Vec<(String, Option<FixedWitness>)>,
    pub isolated: IsolatedFixedPoints,
}

impl FixedPlanesReport {
    pub fn passed(&self) -> bool {
        self.planes.iter().all(PlaneCheck::passed)
            && self.curve_points.iter().all(|(_, w)| w.is_some())
            && self.isolated.passed()
    }
}

/// The two fixed planes of P^5, the points `phi(+-1, 1)` and the isolated
/// fixed points of the sigma-compatible `T'`.
pub fn fixed_planes_check(alpha: &GaussianRational, l: &[GaussianRational; 4]) -> Result<FixedPlanesReport> {
    let data = ExtensionData::equivariant_solution(Some(alpha));
    let planes = FIXED_PLANES
        .iter()
        .map(|(name, rules)| plane_check(&data, name, rules))
        .collect::<Result<Vec<_>>>()?;
    let tprime = sigma_tprime_equations(alpha, l)?;
    let curve = phi_map(&tprime.ambient, alpha, alpha)?;
    let sigma = sigma_tprime();
    let mut curve_points = Vec::new();
    for (label, u) in [("phi(1, 1)", 1), ("phi(-1, 1)", -1)] {
        let uv = [GaussianRational::from_integer(u), GaussianRational::from_integer(1)];
        let p = curve
            .images()
            .iter()
            .map(|img| img.evaluate(&uv))
            .collect::<Result<Vec<_>>>()?;
        curve_points.push((label.to_string(), fixed_witness(&sigma, &[2, 2, 2, 3, 3], &p)?));
    }
    Ok(FixedPlanesReport {
        planes,
        curve_points,
        isolated: isolated_fixed_points(&tprime)?,
    })
}

/// Parameters of `T'` with `beta = alpha` and `m = (l3, -l2, l1, -l4)`.
pub fn equivariant_params(alpha: &GaussianRational, l: &[GaussianRational; 4]) -> TprimeParams {
    TprimeParams {
        alpha: alpha.clone(),
        beta: alpha.clone(),
        l: l.clone(),
        m: [l[2].clone(), -l[1].clone(), l[0].clone(), -l[3].clone()],
    }
}

/// `z1^2 = y1 f^2 + y2^2(l1 f + l2 y2 + l3 g) + l4 y2 f g` and its image
/// `z2^2 = y3 g^2 + y2^2(l3 f - l2 y2 + l1 g) - l4 y2 f g`, with
/// `f = y1 + alpha y3` and `g = alpha y1 + y3`.
pub fn sigma_tprime_equations(alpha: &GaussianRational, l: &[GaussianRational; 4]) -> Result<VarietyPresentation> {
    project_t(&equivariant_params(alpha, l))
}

/// True when `sigma` sends the first equation to the second.
pub fn swaps_equations(variety: &VarietyPresentation, sigma: &InvolutionSpec) -> Result<bool> {
    let [e1, e2] = variety.equations.as_slice() else {
        return Err(Error::Contract(format!("{} does not have two equations", variety.name)));
    };
    Ok(sigma.act(e1)? == *e2 && sigma.act(e2)? == *e1)
}

/// The swap identity on `T'` and on its extension `W'`.
pub fn check_tprime_swap(alpha: &GaussianRational, l: &[GaussianRational; 4]) -> Result<(bool, bool)> {
    let t = sigma_tprime_equations(alpha, l)?;
    let w = build_wprime(&equivariant_params(alpha, l))?;
    let rings = ExtensionRings::numeric();
    Ok((swaps_equations(&t, &sigma_tprime())?, swaps_equations(&w, &sigma_wprime(&rings))?))
}

/// `Some(mu)` candidates for a numeric point of the ambient of `W'`.
pub fn wprime_point_witness(point: &[GaussianRational]) -> Result<Option<FixedWitness>> {
    fixed_witness(&sigma_wprime(&ExtensionRings::numeric()), &S_WEIGHTS, point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn ls() -> [GaussianRational; 4] {
        [q("1"), q("-2"), q("1/3"), q("5")]
    }

    #[test]
    fn phi_is_equivariant_numerically() {
        for a in ["2", "0", "-1/3", "1+i"] {
            let data = ExtensionData::equivariant_solution(Some(&q(a)));
            let r = check_phi_equivariance(&data).unwrap();
            assert!(r.passed(), "alpha = {a}: {r:?}");
        }
    }

    #[test]
    fn phi_is_equivariant_symbolically() {
        let data = ExtensionData::equivariant_solution(None);
        let r = check_phi_equivariance(&data).unwrap();
        assert!(r.symbolic && r.passed(), "{r:?}");
    }

    #[test]
    fn perturbed_f1_breaks_equivariance() {
        let data = ExtensionData::equivariant_solution(Some(&q("2")));
        let map = equivariant_phi(&data).unwrap();
        let rings = data.rings();
        let mut images = map.images().to_vec();
        let z1 = rings.s.index_of("z1").unwrap();
        images[z1] = &images[z1] + &parse_poly("a^3", &rings.m).unwrap();
        let bad = RingMap::new(&rings.s, &rings.m, images).unwrap();
        let failures = phi_equivariance_failures(rings, &bad).unwrap();
        assert!(failures.contains(&"z1".to_string()) || failures.contains(&"z2".to_string()));
    }

    #[test]
    fn unequal_scalars_are_rejected() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        assert!(matches!(check_phi_equivariance(&data), Err(Error::Domain(_))));
    }

    #[test]
    fn fixed_planes_and_points() {
        let r = fixed_planes_check(&q("2"), &ls()).unwrap();
        assert!(r.passed(), "{r:?}");
        let mu = |w: &Option<FixedWitness>| w.as_ref().unwrap().mu_candidates.clone();
        assert_eq!(mu(&r.planes[0].p5_witness), vec![q("-1")]);
        assert_eq!(mu(&r.planes[1].p5_witness), vec![q("1")]);
        assert_eq!(mu(&r.curve_points[0].1), vec![q("-1")]);
        assert_eq!(mu(&r.curve_points[1].1), vec![q("1")]);
    }

    #[test]
    fn wrong_plane_is_not_fixed() {
        let data = ExtensionData::equivariant_solution(Some(&q("2")));
        let c = plane_check(&data, "u = v, a = d, b = c", &[("v", "u"), ("d", "a"), ("c", "b")]).unwrap();
        assert!(c.p5_witness.is_none());
    }

    #[test]
    fn tprime_pair_is_swapped() {
        let (t, w) = check_tprime_swap(&q("3"), &ls()).unwrap();
        assert!(t);
        assert!(w);
        let bare = sigma_tprime_equations(&q("3"), &std::array::from_fn(|_| q("0"))).unwrap();
        let ctx = tprime_ambient();
        assert_eq!(bare.equations[1], parse_poly("z2^2 - y3*(3*y1 + y3)^2", &ctx).unwrap());
        let s = sigma_tprime();
        let y2 = parse_poly("y2^3", &ctx).unwrap();
        assert_eq!(s.act(&y2).unwrap(), -&y2);
    }
}
