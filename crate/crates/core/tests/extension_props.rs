use hyperell::algebra::GaussianRational;
use hyperell::extension::{
    build_wprime, corollary_equations, extended_equations, phi, phi0, verify_kernel, ExtensionData, ExtensionRings,
};
use hyperell::random::Sampler;
use hyperell::tower::TprimeParams;
use num_traits::One;
use proptest::prelude::*;

fn params(seed: u64) -> TprimeParams {
    let mut rng = Sampler::new(seed);
    loop {
        let (alpha, beta) = (rng.scalar(), rng.scalar());
        if (&alpha * &beta).is_one() {
            continue;
        }
        return TprimeParams {
            alpha,
            beta,
            l: std::array::from_fn(|_| rng.scalar()),
            m: std::array::from_fn(|_| rng.scalar()),
        };
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn everything_lies_in_the_kernel(seed in any::<u64>()) {
        let p = params(seed);
        let data = ExtensionData::standard_solution(&p.alpha, &p.beta);
        for e in extended_equations(&data).unwrap() {
            prop_assert!(verify_kernel(&e, &data).unwrap());
        }
        for q in corollary_equations(&data).unwrap() {
            prop_assert!(verify_kernel(&q, &data).unwrap());
        }
        let w = build_wprime(&p).unwrap();
        let report = w.verify().unwrap();
        prop_assert!(report.passed(), "{:?}", report.first_failure());
    }
}

#[test]
fn phi_preserves_weights() {
    let data = ExtensionData::standard_solution(&GaussianRational::from_integer(2), &"1/3".parse().unwrap());
    let rings: &ExtensionRings = data.rings();
    for map in [phi(&data).unwrap(), phi0(rings)] {
        let src = map.source().clone();
        for (j, img) in map.images().iter().enumerate() {
            let d = img.homogeneity().unwrap().degree();
            assert_eq!(d, src.weight(j).map(i64::from), "{} -> {img}", src.name(j));
        }
    }
}

#[test]
fn symbolic_kernel() {
    let data = ExtensionData::symbolic_standard_solution();
    for e in extended_equations(&data).unwrap() {
        assert!(verify_kernel(&e, &data).unwrap());
    }
}
