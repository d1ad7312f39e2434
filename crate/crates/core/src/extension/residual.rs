//! Squaring the images of `z1`, `z2`, rewriting `u^2`, `v^2` through `Phi0`,
//! and the two extended branch equations.

use super::data::ExtensionData;
use super::maps::{phi, z_images_in_cover, SyzygyVector};
use super::rings::ExtensionRings;
use crate::algebra::{MultiPoly, RingMap};
use crate::tower::CoverAlgebra;
use crate::error::Result;

/// `Phi*(z_i^2)` written as `base + ru*u + rv*v + ruv*uv` with coefficients in `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub base: MultiPoly,
    pub u: MultiPoly,
    pub v: MultiPoly,
    pub uv: MultiPoly,
}

impl Residual {
    /// `Phi0(ru) u + Phi0(rv) v + Phi0(ruv) uv` in `M`.
    pub fn target(&self, rings: &ExtensionRings) -> Result<MultiPoly> {
        let map = rings.phi0();
        let m = &rings.m;
        let u = ExtensionRings::var(m, "u");
        let v = ExtensionRings::var(m, "v");
        let uv = &u * &v;
        let mut acc = &map.substitute(&self.u)? * &u;
        acc += &(&map.substitute(&self.v)? * &v);
        acc += &(&map.substitute(&self.uv)? * &uv);
        Ok(acc)
    }

    fn components(&self) -> [&MultiPoly; 3] {
        [&self.u, &self.v, &self.uv]
    }

    /// Equality of the `u`, `v`, `uv` parts.
    pub fn same_parts(&self, other: &Residual) -> bool {
        self.components() == other.components()
    }
}

/// The rewriting `u^2 = y1 - 2av`, `v^2 = y3 - 2du` on `R[u, v]`.
pub fn cover_algebra(rings: &ExtensionRings) -> CoverAlgebra {
    let c = &rings.cover;
    let v = |n: &str| ExtensionRings::var(c, n);
    let u_sq = &v("y1") - &(&v("a") * &v("v")).scale_int(2);
    let v_sq = &v("y3") - &(&v("d") * &v("u")).scale_int(2);
    CoverAlgebra::new(c, "u", "v", &u_sq, &v_sq).unwrap()
}

/// The residuals `K` (from `z1`) and `L` (from `z2`) computed by squaring and
/// rewriting, valid for arbitrary corrections.
pub fn residuals(data: &ExtensionData) -> Result<(Residual, Residual)> {
    let rings = data.rings();
    let alg = cover_algebra(rings);
    let split = |z: &MultiPoly| -> Result<Residual> {
        let nf = alg.reduce(&(z * z))?;
        Ok(Residual {
            base: nf.c0.embed(&rings.r)?,
            u: nf.cu.embed(&rings.r)?,
            v: nf.cv.embed(&rings.r)?,
            uv: nf.cuv.embed(&rings.r)?,
        })
    };
    let [z1, z2] = z_images_in_cover(data)?;
    Ok((split(&z1)?, split(&z2)?))
}

struct Vars {
    a: MultiPoly,
    d: MultiPoly,
    y1: MultiPoly,
    y3: MultiPoly,
}

fn vars(data: &ExtensionData) -> Vars {
    let r = &data.rings().r;
    let v = |n: &str| ExtensionRings::var(r, n);
    Vars {
        a: v("a"),
        d: v("d"),
        y1: v("y1"),
        y3: v("y3"),
    }
}

fn sum(parts: &[MultiPoly]) -> MultiPoly {
    let mut it = parts.iter();
    let mut acc = it.next().unwrap().clone();
    for p in it {
        acc += p;
    }
    acc
}

/// The closed forms of `K` and `L`, including the base parts, for data with
/// `s1 = s3 = t1 = t3 = 0`.
pub fn closed_form_residuals(data: &ExtensionData) -> (Residual, Residual) {
    let Vars { a, d, y1, y3 } = vars(data);
    let ad = &a * &d;
    let (s2, s4, s5) = (data.s(2), data.s(4), data.s(5));
    let (t2, t4, t5) = (data.t(2), data.t(4), data.t(5));
    let fs = &data.f() + s4;
    let gt = &data.g() + t5;
    let k = Residual {
        base: base_one(data),
        u: sum(&[
            (&(&fs * s2) * &ad).scale_int(8),
            (&(s5 * s5) * &d).scale_int(-2),
            (&(&(s2 * s2) * &d) * &y1).scale_int(-2),
            (&(s2 * s5) * &y3).scale_int(2),
        ]),
        v: sum(&[
            (&(&fs * &fs) * &a).scale_int(-2),
            (&(s2 * s5) * &ad).scale_int(8),
            (&(&fs * s2) * &y1).scale_int(2),
            (&(&(s2 * s2) * &a) * &y3).scale_int(-2),
        ]),
        uv: &(&fs * s5).scale_int(2) + &(&(s2 * s2) * &ad).scale_int(4),
    };
    let l = Residual {
        base: base_two(data),
        u: sum(&[
            (&(&gt * &gt) * &d).scale_int(-2),
            (&(t2 * t4) * &ad).scale_int(8),
            (&(&gt * t2) * &y3).scale_int(2),
            (&(&(t2 * t2) * &d) * &y1).scale_int(-2),
        ]),
        v: sum(&[
            (&(&gt * t2) * &ad).scale_int(8),
            (&(t4 * t4) * &a).scale_int(-2),
            (&(&(t2 * t2) * &a) * &y3).scale_int(-2),
            (&(t2 * t4) * &y1).scale_int(2),
        ]),
        uv: &(&gt * t4).scale_int(2) + &(&(t2 * t2) * &ad).scale_int(4),
    };
    (k, l)
}

/// `y1(f+s4)^2 - 4(f+s4)s2 a y3 - 4 s2 s5 d y1 + s2^2 y1 y3 + s5^2 y3`.
fn base_one(data: &ExtensionData) -> MultiPoly {
    let Vars { a, d, y1, y3 } = vars(data);
    let (s2, s5) = (data.s(2), data.s(5));
    let fs = &data.f() + data.s(4);
    sum(&[
        &y1 * &(&fs * &fs),
        (&(&(&fs * s2) * &a) * &y3).scale_int(-4),
        (&(&(s2 * s5) * &d) * &y1).scale_int(-4),
        &(s2 * s2) * &(&y1 * &y3),
        &(s5 * s5) * &y3,
    ])
}

/// `y3(g+t5)^2 - 4(g+t5)t2 d y1 - 4 t2 t4 a y3 + t2^2 y1 y3 + t4^2 y1`.
fn base_two(data: &ExtensionData) -> MultiPoly {
    let Vars { a, d, y1, y3 } = vars(data);
    let (t2, t4) = (data.t(2), data.t(4));
    let gt = &data.g() + data.t(5);
    sum(&[
        &y3 * &(&gt * &gt),
        (&(&(&gt * t2) * &d) * &y1).scale_int(-4),
        (&(&(t2 * t4) * &a) * &y3).scale_int(-4),
        &(t2 * t2) * &(&y1 * &y3),
        &(t4 * t4) * &y1,
    ])
}

/// Closed form of `xi`: `xi2 = 6(1-ab)a^2 d`, `xi3 = -2 alpha a (f+s4) - 2(1-ab)a^3`.
pub fn closed_form_xi(data: &ExtensionData) -> SyzygyVector {
    let Vars { a, d, .. } = vars(data);
    let k = data.one_minus_ab();
    let mut x = SyzygyVector::zero(data.rings());
    x.components[1] = (&(&k * &(&a * &a)) * &d).scale_int(6);
    x.components[2] = &(&(data.alpha() * &a) * &(&data.f() + data.s(4))).scale_int(-2)
        + &(&k * &a.pow(3)).scale_int(-2);
    x
}

/// Closed form of `eta`: `eta2 = -2 beta d (g+t5) - 2(1-ab)d^3`, `eta3 = 6(1-ab)a d^2`.
pub fn closed_form_eta(data: &ExtensionData) -> SyzygyVector {
    let Vars { a, d, .. } = vars(data);
    let k = data.one_minus_ab();
    let mut x = SyzygyVector::zero(data.rings());
    x.components[1] = &(&(data.beta() * &d) * &(&data.g() + data.t(5))).scale_int(-2)
        + &(&k * &d.pow(3)).scale_int(-2);
    x.components[2] = (&(&k * &a) * &(&d * &d)).scale_int(6);
    x
}

/// The two weight-6 equations in `S` extending `z1^2 = y1 f^2` and
/// `z2^2 = y3 g^2`, assembled from the closed-form right-hand sides.
pub fn extended_equations(data: &ExtensionData) -> Result<[MultiPoly; 2]> {
    let rings = data.rings();
    let s = &rings.s;
    let z = |n: &str| ExtensionRings::var(s, n);
    let (z1, z2) = (z("z1"), z("z2"));
    let square = |w: &MultiPoly| w * w;
    let eq = |zi: &MultiPoly, base: MultiPoly, x: SyzygyVector| -> Result<MultiPoly> {
        x.equation(&(&square(zi) - &base.embed(s)?), rings)
    };
    Ok([
        eq(&z1, base_one(data), closed_form_xi(data))?,
        eq(&z2, base_two(data), closed_form_eta(data))?,
    ])
}

/// True when `Phi*(p)` is the zero polynomial; `p` lives over `S` or a
/// subring of it.
pub fn verify_kernel(p: &MultiPoly, data: &ExtensionData) -> Result<bool> {
    Ok(kernel_image(&phi(data)?, p)?.is_zero())
}

/// `Phi*(p)` for a prepared map.
pub fn kernel_image(map: &RingMap, p: &MultiPoly) -> Result<MultiPoly> {
    map.substitute(&p.embed(map.source())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;
    use crate::random::Sampler;
    use crate::extension::rings::ABCD;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn random_data(seed: u64) -> ExtensionData {
        let mut rng = Sampler::new(seed);
        let rings = ExtensionRings::numeric();
        let zero = MultiPoly::zero(&rings.r);
        let mut form = |d: u32| rng.form(&rings.r, &ABCD, d);
        let s = [zero.clone(), form(1), zero.clone(), form(2), form(2)];
        let t = [zero.clone(), form(1), zero, form(2), form(2)];
        let (al, be) = (rng.scalar(), rng.scalar());
        ExtensionData::new(&al, &be, s, t).unwrap()
    }

    #[test]
    fn computed_residuals_match_closed_forms() {
        for seed in 0..3 {
            let data = random_data(seed);
            let (k, l) = residuals(&data).unwrap();
            let (pk, pl) = closed_form_residuals(&data);
            assert_eq!(k, pk, "seed {seed}");
            assert_eq!(l, pl, "seed {seed}");
        }
    }

    #[test]
    fn kuv_at_origin_solution() {
        let data = ExtensionData::standard_solution(&q("0"), &q("0"));
        let (k, _) = residuals(&data).unwrap();
        assert_eq!(k.uv.to_string(), "4*a^3*d");
    }

    #[test]
    fn closed_form_xi_eta_represent_residuals() {
        let data = ExtensionData::standard_solution(&q("2"), &q("-1/3"));
        let (k, l) = residuals(&data).unwrap();
        let rings = data.rings();
        assert_eq!(closed_form_xi(&data).image(&data).unwrap(), k.target(rings).unwrap());
        assert_eq!(closed_form_eta(&data).image(&data).unwrap(), l.target(rings).unwrap());
    }

    #[test]
    fn extended_equations_in_kernel() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        for e in extended_equations(&data).unwrap() {
            assert!(verify_kernel(&e, &data).unwrap());
            assert_eq!(e.homogeneity().unwrap().degree(), Some(6));
        }
        let sym = ExtensionData::symbolic_standard_solution();
        for e in extended_equations(&sym).unwrap() {
            assert!(verify_kernel(&e, &sym).unwrap());
        }
    }

    #[test]
    fn perturbed_correction_leaves_kernel() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        let eqs = extended_equations(&data).unwrap();
        let bad = data.with_s(2, &(data.s(2) + &data.form("b").unwrap())).unwrap();
        assert!(!verify_kernel(&eqs[0], &bad).unwrap());
    }
}
