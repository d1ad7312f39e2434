//! The 6-fold `W'` in P(1^4, 2^3, 3^2) extending the projected surface `T'`.

use num_traits::Zero;

use super::corollary::q_tilde;
use super::data::ExtensionData;
use super::maps::phi;
use super::residual::extended_equations;
use super::rings::{ExtensionRings, ABCD};
use crate::algebra::{GaussianRational, MultiPoly};
use crate::error::Result;
use crate::tower::presentation::VarietyPresentation;
use crate::tower::projection::tprime_ambient;
use crate::tower::TprimeParams;

/// Extended branch equations minus the `l`, `m` combinations of the
/// extended `Q_i`, mirroring the defining equations of `T'`.
pub fn build_wprime(params: &TprimeParams) -> Result<VarietyPresentation> {
    let data = ExtensionData::standard_solution(&params.alpha, &params.beta);
    let [mut e1, mut e2] = extended_equations(&data)?;
    for i in 0..4 {
        let (l, m) = (&params.l[i], &params.m[i]);
        if l.is_zero() && m.is_zero() {
            continue;
        }
        let q = q_tilde(&data, i + 1)?;
        e1 -= &(&q * l);
        e2 -= &(&q * m);
    }
    Ok(VarietyPresentation {
        name: "W'".into(),
        ambient: data.rings().s.clone(),
        equations: vec![e1, e2],
        parametrization: phi(&data)?,
        cover: None,
        metadata: vec![("contains".into(), "image of P^5 under Phi".into())],
    })
}

/// Sets `a = b = c = d = 0` and moves the result to the ambient ring of `T'`.
pub fn restrict_to_tprime(p: &MultiPoly) -> Result<MultiPoly> {
    let zero = GaussianRational::zero();
    let mut out = p.clone();
    for i in ABCD {
        out = out.specialize(i, &zero);
    }
    out.embed(&tprime_ambient())
}

/// True when the restriction of every equation of `W'` is the matching
/// equation of `T'`.
pub fn restriction_matches(params: &TprimeParams) -> Result<bool> {
    let w = build_wprime(params)?;
    let t = crate::tower::project_t(params)?;
    let restricted = w
        .equations
        .iter()
        .map(restrict_to_tprime)
        .collect::<Result<Vec<_>>>()?;
    Ok(restricted == t.equations)
}

/// The numeric rings used by `W'`.
pub fn wprime_ambient() -> crate::algebra::Ctx {
    ExtensionRings::numeric().s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn params() -> TprimeParams {
        TprimeParams {
            alpha: q("2"),
            beta: q("3"),
            l: [q("1"), q("-2"), q("1/3"), q("i")],
            m: [q("0"), q("5"), q("-1"), q("2/7")],
        }
    }

    #[test]
    fn generic_wprime_verifies() {
        let w = build_wprime(&params()).unwrap();
        assert!(w.verify().unwrap().passed());
    }

    #[test]
    fn restricts_to_tprime() {
        assert!(restriction_matches(&params()).unwrap());
        assert!(restriction_matches(&TprimeParams::bare(q("0"), q("0"))).unwrap());
    }

    #[test]
    fn bare_case_is_the_extended_pair() {
        let p = TprimeParams::bare(q("2"), q("3"));
        let w = build_wprime(&p).unwrap();
        let data = ExtensionData::standard_solution(&p.alpha, &p.beta);
        assert_eq!(w.equations, extended_equations(&data).unwrap().to_vec());
    }

    #[test]
    fn unit_product_with_q2_fails() {
        let mut p = TprimeParams::bare(q("2"), q("1/2"));
        assert!(build_wprime(&p).is_ok());
        p.l[1] = q("1");
        assert!(matches!(build_wprime(&p), Err(Error::Domain(_))));
    }
}
