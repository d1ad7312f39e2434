use hyperell::algebra::poly::monomials_of_degree;
use hyperell::algebra::{GaussianRational, MultiPoly, UniPoly};
use hyperell::extension::ExtensionRings;
use hyperell::involution::k3::{sigma_base, sigma_t_cover};
use hyperell::involution::{
    candidate_point, check_k3_involution, fixed_quartic, sigma_d, sigma_e, sigma_p5, sigma_t, sigma_tprime,
    sigma_w, sigma_wprime, tau_e, verify_fixed_point, BranchSwapData, DeclaredSquare, InvolutionSpec,
};
use hyperell::random::Sampler;
use num_traits::Zero;
use proptest::prelude::*;

fn all_specs() -> Vec<InvolutionSpec> {
    let rings = ExtensionRings::numeric();
    vec![
        sigma_e(),
        tau_e(),
        sigma_d(),
        sigma_t(),
        sigma_t_cover(),
        sigma_base(),
        sigma_p5(&rings),
        sigma_tprime(),
        sigma_wprime(&rings),
        sigma_w(),
    ]
}

fn random_poly(spec: &InvolutionSpec, seed: u64) -> MultiPoly {
    let ctx = spec.ctx();
    let vars: Vec<usize> = (0..ctx.len()).collect();
    let mut rng = Sampler::new(seed);
    let mut p = MultiPoly::zero(ctx);
    for d in 1..=3 {
        let ms = monomials_of_degree(ctx, &vars, d);
        for _ in 0..3 {
            if ms.is_empty() {
                break;
            }
            let m = ms[rng.index(ms.len())].clone();
            p += &MultiPoly::monomial(ctx, m, rng.scalar());
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn square_matches_declaration(seed in any::<u64>()) {
        for spec in all_specs() {
            let square = spec.compose(&spec).unwrap();
            let expected = match spec.declared_square() {
                DeclaredSquare::Identity => InvolutionSpec::identity(spec.ctx()),
                DeclaredSquare::Negation => InvolutionSpec::negation(spec.ctx()),
            };
            prop_assert!(square.same_action(&expected), "{}", spec.name());
            let p = random_poly(&spec, seed);
            prop_assert_eq!(spec.act(&spec.act(&p).unwrap()).unwrap(), expected.act(&p).unwrap());
        }
    }
}

fn q(s: &str) -> GaussianRational {
    s.parse().unwrap()
}

/// Branch data whose fixed quartic is `c4 l^4 + c3 l^3 + c2 l^2 + c1 l + c0`.
fn data_with_quartic(c: &[GaussianRational; 5]) -> BranchSwapData {
    let z = GaussianRational::zero;
    BranchSwapData {
        alpha: [c[4].clone(), c[3].clone(), c[2].clone(), c[1].clone()],
        beta: [z(), z(), z(), -c[0].clone()],
    }
}

#[test]
fn fixed_quartic_predicts_fixed_points() {
    let roots = [q("1"), q("-2"), q("1/3"), q("3/2")];
    let mut quartic = UniPoly::new(vec![q("1")]);
    for r in &roots {
        quartic = quartic.mul(&UniPoly::new(vec![-r.clone(), q("1")]));
    }
    let c: [GaussianRational; 5] = std::array::from_fn(|k| quartic.coeff(k));
    let data = data_with_quartic(&c);
    assert_eq!(fixed_quartic(&data), quartic);
    let (t, report) = check_k3_involution(&data).unwrap();
    assert!(report.passed(), "{report:?}");
    let s = sigma_t();
    for lam in [q("1"), q("-2"), q("1/3"), q("3/2"), q("5")] {
        let check = verify_fixed_point(&t, &candidate_point(&lam).unwrap(), &s).unwrap();
        assert_eq!(check.passed(), quartic.evaluate(&lam).is_zero(), "lambda = {lam}");
    }
}
