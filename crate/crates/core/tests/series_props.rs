use hyperell::series::{BigradedSeries, DenominatorSpec, EpsInt, GodeauxAnalysis};
use proptest::prelude::*;

fn series() -> impl Strategy<Value = BigradedSeries> {
    prop::collection::vec((-20i64..=20, -20i64..=20), 1..14)
        .prop_map(|c| BigradedSeries::from_coeffs(c.into_iter().map(|(a, b)| EpsInt::new(a, b)).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn numerator_then_division_round_trips(s in series()) {
        let d = DenominatorSpec::godeaux_cover();
        prop_assert_eq!(s.numerator_of(&d).divide_by(&d).unwrap(), s);
    }
}

#[test]
fn first_numerator_term_is_e_minus_one_in_degree_four() {
    let a = GodeauxAnalysis::run(12).unwrap();
    assert_eq!(a.first_numerator_term(), Some((4, EpsInt::new(-1, 1))));
    assert_eq!(EpsInt::new(-1, 1).to_string(), "e-1");
}

#[test]
fn degree_eight_coefficients() {
    let a = GodeauxAnalysis::run(8).unwrap();
    assert_eq!(a.numerator.coeff(8), EpsInt::new(8, 7));
    assert_eq!(a.numerator.coeff(7), EpsInt::new(0, 0));
    assert!(GodeauxAnalysis::run(3).is_err());
}
