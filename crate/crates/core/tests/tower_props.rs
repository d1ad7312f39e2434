use hyperell::algebra::RingMap;
use hyperell::rendering::SplitPreference;
use hyperell::tower::branch::k3_base;
use hyperell::tower::{
    construct_curve, construct_e, construct_k3, construct_k3_with, node_count, project_t, BranchData,
    TprimeParams, VarietyPresentation,
};
use hyperell::random::Sampler;
use proptest::prelude::*;

fn assert_verified(v: &VarietyPresentation) {
    let report = v.verify().unwrap();
    assert!(report.passed(), "{}: {:?}", v.name, report.first_failure());
    for c in &report.checks {
        assert!(c.homogeneous && c.pullback_zero);
    }
}

fn swapped(branch: &BranchData, rules: &[(&str, &str)]) -> BranchData {
    let base = k3_base();
    let map = RingMap::from_text(&base, &base, rules).unwrap();
    BranchData::k3(&map.substitute(branch.f()).unwrap(), &map.substitute(branch.g()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn every_construction_verifies(seed in 0u64..10_000) {
        let curve = BranchData::random_curve(seed);
        assert_verified(&construct_curve(&curve).unwrap());
        assert_verified(&construct_e(&curve).unwrap());
        assert_verified(&construct_k3(&BranchData::random_k3(seed)).unwrap());
        let mut rng = Sampler::new(seed);
        let params = TprimeParams {
            alpha: rng.scalar(),
            beta: rng.scalar(),
            l: std::array::from_fn(|_| rng.scalar()),
            m: std::array::from_fn(|_| rng.scalar()),
        };
        assert_verified(&project_t(&params).unwrap());
    }

    #[test]
    fn split_choice_changes_nothing_modulo_the_ideal(seed in 0u64..10_000) {
        let b = BranchData::random_k3(seed);
        let first = construct_k3_with(&b, SplitPreference::First).unwrap();
        let second = construct_k3_with(&b, SplitPreference::Second).unwrap();
        prop_assert_eq!(first.equations.len(), second.equations.len());
        for (p, q) in first.equations.iter().zip(&second.equations) {
            prop_assert!(first.pullback_vanishes(&(p - q)).unwrap());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(3))]

    #[test]
    fn node_count_ignores_coordinate_swaps(seed in 0u64..10_000) {
        let b = BranchData::random_k3(seed);
        let n = node_count(&b).unwrap();
        prop_assert_eq!(n.points, 10);
        prop_assert!(n.transversal);
        for rules in [[("s1", "s2"), ("s2", "s1")], [("t1", "t2"), ("t2", "t1")]] {
            let m = node_count(&swapped(&b, &rules)).unwrap();
            prop_assert_eq!(m.points, n.points);
            prop_assert_eq!(m.transversal, n.transversal);
        }
    }
}

#[test]
fn generic_k3_has_twenty_equations() {
    let t = construct_k3(&BranchData::random_k3(7)).unwrap();
    assert_eq!(t.equations.len(), 20);
}
