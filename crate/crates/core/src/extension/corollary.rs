//! Equations extending `Q1..Q4`: each `Q_i = L_i y2` lifts to
//! `L_i y2^2 = nu1 + nu2 z1 + nu3 z2` where `nu` solves
//! `L_i y2 (bu + cv) = (1, u, v, uv) B nu`.

use num_traits::{One, Zero};

use super::data::ExtensionData;
use super::maps::{matrix_a, SyzygyVector};
use super::rings::ExtensionRings;
use crate::algebra::{parse_poly, Ctx, MultiPoly, RingMap, VariableContext};
use crate::error::{Error, Result};

const SYMBOLS: [&str; 11] = ["al", "be", "inv", "F", "G", "s2", "s4", "s5", "t2", "t4", "t5"];

/// `nu2..nu7` for each `Q_i`, in the symbols above; `F = f + s4`, `G = g + t5`
/// and `inv = 1/(al*be - 1)`.
const NU: [[&str; 6]; 4] = [
    [
        "2*b*y2 + 2*(be*a*b - c*d)*c",
        "2*(al*b^2 + c^2)*a",
        "-be*a*s2*y2 - 2*a*c*G + 2*(c*d - be*a*b)*s5",
        "b*F - be*a*b*s2",
        "-c*F - be*a*c*s2 + 2*b*s5",
        "2*b*s2",
    ],
    [
        "2*inv*(b^2 + be*c^2)*b",
        "2*inv*(al*b^2 + c^2)*c",
        "-2*inv*(b^2*F + c^2*G) + (be*a*c + al*b*d)*y2 + 2*(2 - al*be)*a*b*c*d",
        "-b*y2 + 2*c^2*d + (be*a*c + al*b*d)*b",
        "-c*y2 + 2*a*b^2 + (be*a*c + al*b*d)*c",
        "-2*b*c",
    ],
    [
        "2*(b^2 + be*c^2)*d",
        "2*c*y2 - 2*(a*b - al*c*d)*b",
        "-al*d*t2*y2 - 2*b*d*F + 2*(a*b - al*c*d)*t4",
        "-b*G - al*b*d*t2 + 2*c*t4",
        "c*G - al*c*d*t2",
        "2*c*t2",
    ],
    [
        "b*G + c*t4 - t2*y2",
        "c*F + b*s5 - s2*y2",
        "-s5*t4",
        "-t2*F - s2*t4",
        "-s2*G - s5*t2",
        "-2*s2*t2",
    ],
];

/// `L_i` with `Q_i = L_i y2` (unextended form in `F`, `G`).
const COFACTOR: [&str; 4] = ["F*y2", "y2^2", "G*y2", "F*G"];

fn symbol_ring(rings: &ExtensionRings) -> Ctx {
    let mut names: Vec<String> = rings.r.names().to_vec();
    names.extend(SYMBOLS.iter().map(|s| s.to_string()));
    VariableContext::ungraded(&names).unwrap()
}

/// Substitution of the symbols by their values for `data`.
fn evaluator(data: &ExtensionData, ctx: &Ctx, inv: Option<MultiPoly>) -> Result<RingMap> {
    let r = &data.rings().r;
    let fs = &data.f() + data.s(4);
    let gt = &data.g() + data.t(5);
    let inv = inv.unwrap_or_else(|| MultiPoly::zero(r));
    let pairs = vec![
        ("al", data.alpha().clone()),
        ("be", data.beta().clone()),
        ("inv", inv),
        ("F", fs),
        ("G", gt),
        ("s2", data.s(2).clone()),
        ("s4", data.s(4).clone()),
        ("s5", data.s(5).clone()),
        ("t2", data.t(2).clone()),
        ("t4", data.t(4).clone()),
        ("t5", data.t(5).clone()),
    ];
    RingMap::from_pairs(ctx, r, pairs)
}

/// `1/(alpha*beta - 1)`, which only the extension of `Q2` needs.
fn inverse_factor(data: &ExtensionData) -> Result<MultiPoly> {
    let Some((a, b)) = data.scalars() else {
        return Err(Error::Domain(
            "the extension of Q2 divides by alpha*beta - 1 and needs numeric alpha, beta".into(),
        ));
    };
    let den = &(&a * &b) - &crate::algebra::GaussianRational::one();
    if den.is_zero() {
        return Err(Error::Domain("the extension of Q2 is undefined at alpha*beta = 1".into()));
    }
    Ok(MultiPoly::constant(&data.rings().r, den.inv().unwrap()))
}

/// The vector `nu` for `Q_i`, `i` in `1..=4`, with `nu1` assembled from the
/// first column of `B`.
pub fn nu_vector(data: &ExtensionData, i: usize) -> Result<SyzygyVector> {
    if !(1..=4).contains(&i) {
        return Err(Error::Contract(format!("Q index {i} outside 1..=4")));
    }
    let rings = data.rings();
    let ctx = symbol_ring(rings);
    let inv = if i == 2 { Some(inverse_factor(data)?) } else { None };
    let eval = evaluator(data, &ctx, inv)?;
    let tail = NU[i - 1]
        .iter()
        .map(|t| eval.substitute(&parse_poly(t, &ctx)?))
        .collect::<Result<Vec<_>>>()?;
    // nu1 = y2 nu4 - b y1 nu5 - c y3 nu6 - A[0][3] nu7, minus the first row
    // of A applied to nu4..nu7
    let a = matrix_a(rings);
    let mut nu1 = MultiPoly::zero(&rings.r);
    for (k, x) in tail[2..].iter().enumerate() {
        nu1 -= &(a.get(0, k) * x);
    }
    let mut components = vec![nu1];
    components.extend(tail);
    SyzygyVector::new(components)
}

/// `L_i` with the corrections folded in: `(f+s4) y2`, `y2^2`, `(g+t5) y2`,
/// `(f+s4)(g+t5)`.
pub fn cofactor(data: &ExtensionData, i: usize) -> Result<MultiPoly> {
    let ctx = symbol_ring(data.rings());
    evaluator(data, &ctx, None)?.substitute(&parse_poly(COFACTOR[i - 1], &ctx)?)
}

/// The extended equation `L_i y2 - nu1 - nu2 z1 - nu3 z2` in `S`.
pub fn q_tilde(data: &ExtensionData, i: usize) -> Result<MultiPoly> {
    let nu = nu_vector(data, i)?;
    let y2 = ExtensionRings::var(&data.rings().r, "y2");
    nu.equation(&(&cofactor(data, i)? * &y2), data.rings())
}

/// The four extended equations; fails when `Q2` is out of domain.
pub fn corollary_equations(data: &ExtensionData) -> Result<Vec<MultiPoly>> {
    (1..=4).map(|i| q_tilde(data, i)).collect()
}

/// `(0, b L_i, c L_i, 0)`: the lift of `L_i (bu + cv)` to `R^4`.
pub fn free_target(data: &ExtensionData, i: usize) -> Result<Vec<MultiPoly>> {
    let r = &data.rings().r;
    let l = cofactor(data, i)?;
    let v = |n: &str| ExtensionRings::var(r, n);
    Ok(vec![MultiPoly::zero(r), &v("b") * &l, &v("c") * &l, MultiPoly::zero(r)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GaussianRational;
    use crate::extension::residual::verify_kernel;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn q4_last_component() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        let nu = nu_vector(&data, 4).unwrap();
        assert_eq!(nu.components[6], (data.s(2) * data.t(2)).scale_int(-2));
    }

    #[test]
    fn all_four_in_kernel() {
        let data = ExtensionData::standard_solution(&q("2"), &q("3"));
        for (i, e) in corollary_equations(&data).unwrap().iter().enumerate() {
            assert!(verify_kernel(e, &data).unwrap(), "Q{}", i + 1);
            assert!(e.homogeneity().unwrap().is_homogeneous());
        }
    }

    #[test]
    fn nu_solves_the_free_module_problem() {
        let data = ExtensionData::standard_solution(&q("-1/2"), &q("5"));
        for i in 1..=4 {
            let nu = nu_vector(&data, i).unwrap();
            assert_eq!(nu.apply_b(&data).unwrap(), free_target(&data, i).unwrap(), "Q{i}");
        }
    }

    #[test]
    fn q2_rejected_at_unit_product() {
        let data = ExtensionData::standard_solution(&q("2"), &q("1/2"));
        assert!(matches!(q_tilde(&data, 2), Err(Error::Domain(_))));
        for i in [1, 3, 4] {
            assert!(verify_kernel(&q_tilde(&data, i).unwrap(), &data).unwrap());
        }
        let sym = ExtensionData::symbolic_standard_solution();
        assert!(matches!(q_tilde(&sym, 2), Err(Error::Domain(_))));
        assert!(verify_kernel(&q_tilde(&sym, 4).unwrap(), &sym).unwrap());
    }
}
