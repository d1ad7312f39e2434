use hyperell::algebra::{Ctx, MultiPoly, VariableContext};
use hyperell::random::Sampler;
use hyperell::rendering::RenderTarget;
use hyperell::tower::branch::{curve_base, k3_base};
use proptest::prelude::*;

fn veronese() -> RenderTarget {
    let amb: Ctx = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2)]).unwrap();
    RenderTarget::veronese(&curve_base(), ["s1", "s2"], &amb, ["y1", "y2", "y3"]).unwrap()
}

fn segre() -> RenderTarget {
    let amb: Ctx = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2), ("y4", 2)]).unwrap();
    RenderTarget::segre(&k3_base(), ["s1", "s2"], ["t1", "t2"], &amb, ["y1", "y2", "y3", "y4"]).unwrap()
}

fn binary_form(seed: u64, degree: u32) -> MultiPoly {
    Sampler::new(seed).form(&curve_base(), &[0, 1], degree)
}

fn biform(seed: u64, n: i64) -> MultiPoly {
    Sampler::new(seed).biform(&k3_base(), &[0, 1, 2, 3], (n, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(25))]

    #[test]
    fn veronese_round_trip(seed in any::<u64>(), half in 1u32..=4) {
        let r = veronese();
        let p = binary_form(seed, 2 * half);
        prop_assert_eq!(r.pullback(&r.render(&p).unwrap()).unwrap(), p.clone());
        prop_assert!(r.verify_render_ambiguity(&p).unwrap());
    }

    #[test]
    fn segre_round_trip(seed in any::<u64>(), n in 1i64..=3) {
        let r = segre();
        let p = biform(seed, n);
        prop_assert_eq!(r.pullback(&r.render(&p).unwrap()).unwrap(), p.clone());
        prop_assert!(r.verify_render_ambiguity(&p).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn render_of_product_agrees_after_pullback(s1 in any::<u64>(), s2 in any::<u64>()) {
        let r = segre();
        let (p, q) = (biform(s1, 1), biform(s2, 2));
        let diff = &r.render(&(&p * &q)).unwrap() - &(&r.render(&p).unwrap() * &r.render(&q).unwrap());
        prop_assert!(r.pullback(&diff).unwrap().is_zero());
        let v = veronese();
        let (p, q) = (binary_form(s1, 2), binary_form(s2, 4));
        let diff = &v.render(&(&p * &q)).unwrap() - &(&v.render(&p).unwrap() * &v.render(&q).unwrap());
        prop_assert!(v.pullback(&diff).unwrap().is_zero());
    }
}

#[test]
fn odd_degree_is_refused() {
    let r = veronese();
    let err = r.render(&binary_form(1, 3)).unwrap_err();
    assert!(err.to_string().contains("s1") || err.to_string().contains("s2"), "{err}");
}
