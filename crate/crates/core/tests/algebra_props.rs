use hyperell::algebra::linsolve::mat_vec;
use hyperell::algebra::{
    parse_poly, solve_linear_exact, Ctx, GaussianRational, Monomial, MultiPoly, RingMap, VariableContext,
};
use num_traits::Zero;
use proptest::prelude::*;

fn ctx() -> Ctx {
    VariableContext::ungraded(&["x1", "x2", "x3", "x4", "x5"]).unwrap()
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-7i64..=7, 1i64..=7, -7i64..=7, 1i64..=7).prop_map(|(a, b, c, d)| GaussianRational::complex(a, b, c, d))
}

fn exponents() -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..=4, 5).prop_filter("degree at most 4", |e| e.iter().sum::<u16>() <= 4)
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((exponents(), scalar()), 0..6).prop_map(|terms| {
        let c = ctx();
        let mut p = MultiPoly::zero(&c);
        for (e, k) in terms {
            let mut m = Monomial::one(5);
            for (j, &n) in e.iter().enumerate() {
                for _ in 0..n {
                    m = m.mul(&Monomial::var(5, j));
                }
            }
            p += &MultiPoly::monomial(&c, m, k);
        }
        p
    })
}

fn point() -> impl Strategy<Value = Vec<GaussianRational>> {
    prop::collection::vec(scalar(), 5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn distributive_and_associative(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn text_round_trip(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string(), &ctx()).unwrap(), p);
    }

    #[test]
    fn substitution_is_multiplicative(p in poly(), q in poly(), images in prop::collection::vec(poly(), 5)) {
        let c = ctx();
        let map = RingMap::new(&c, &c, images).unwrap();
        let lhs = map.substitute(&(&p * &q)).unwrap();
        let rhs = &map.substitute(&p).unwrap() * &map.substitute(&q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    /// Evaluation at random points agrees with the symbolic verdict on an
    /// identity and on a nonzero polynomial.
    #[test]
    fn numeric_spot_check(p in poly(), q in poly(), r in poly(), pts in prop::collection::vec(point(), 5)) {
        let identity = &(&(&p + &q) * &r) - &(&(&p * &r) + &(&q * &r));
        prop_assert!(identity.is_zero());
        for x in &pts {
            prop_assert!(identity.evaluate(x).unwrap().is_zero());
            let lhs = (&p * &q).evaluate(x).unwrap();
            prop_assert_eq!(lhs, &p.evaluate(x).unwrap() * &q.evaluate(x).unwrap());
        }
        if !p.is_zero() {
            prop_assert!(pts.iter().any(|x| !p.evaluate(x).unwrap().is_zero()));
        }
    }

    #[test]
    fn linear_solutions_satisfy_the_system(
        rows in prop::collection::vec(prop::collection::vec(scalar(), 4), 1..6),
        x in prop::collection::vec(scalar(), 4),
        consistent in any::<bool>(),
        rhs in prop::collection::vec(scalar(), 6),
    ) {
        let b: Vec<GaussianRational> = if consistent {
            mat_vec(&rows, &x)
        } else {
            rhs[..rows.len()].to_vec()
        };
        let sol = solve_linear_exact(&rows, &b).unwrap();
        if consistent {
            prop_assert!(sol.is_consistent());
        }
        if let Some(y) = sol.solution() {
            prop_assert_eq!(mat_vec(&rows, y), b);
        }
    }
}
