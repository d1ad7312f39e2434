//! The involution of the K3 surface `T` swapping the two rulings of
//! P^1 x P^1 together with the branch curves.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::spec::{equivariance_failures, fixed_witness, DeclaredSquare, FixedWitness, InvolutionSpec};
use crate::algebra::{parse_poly, GaussianRational, MultiPoly, UniPoly};
use crate::error::{Error, Result};
use crate::tower::branch::k3_base;
use crate::tower::k3::{k3_ambient, k3_cover_ring};
use crate::tower::{construct_k3, BranchData, VarietyPresentation};

const AMBIENT_RULES: [(&str, &str); 9] = [
    ("y1", "-y1"),
    ("y2", "y3"),
    ("y3", "y2"),
    ("y4", "-y4"),
    ("z1", "-z3"),
    ("z2", "z4"),
    ("z3", "-z1"),
    ("z4", "z2"),
    ("t", "-t"),
];

const BASE_RULES: [(&str, &str); 4] = [("s1", "t1"), ("s2", "-t2"), ("t1", "-s1"), ("t2", "s2")];

/// `sigma` on the ambient P(2^4, 3^4, 4) of `T`.
pub fn sigma_t() -> InvolutionSpec {
    InvolutionSpec::from_text("sigma", &k3_ambient(), &AMBIENT_RULES, DeclaredSquare::Identity).unwrap()
}

/// The lift to the cover ring: `s -> (t1, -t2)`, `t -> (-s1, s2)`,
/// `u -> v`, `v -> -u`.
pub fn sigma_t_cover() -> InvolutionSpec {
    let mut rules = BASE_RULES.to_vec();
    rules.extend([("u", "v"), ("v", "-u")]);
    InvolutionSpec::from_text("sigma", &k3_cover_ring(), &rules, DeclaredSquare::Negation).unwrap()
}

/// The same substitution on P^1 x P^1.
pub fn sigma_base() -> InvolutionSpec {
    InvolutionSpec::from_text("sigma", &k3_base(), &BASE_RULES, DeclaredSquare::Negation).unwrap()
}

/// Coefficients of a pair of branch curves exchanged by `sigma`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSwapData {
    pub alpha: [GaussianRational; 4],
    pub beta: [GaussianRational; 4],
}

impl BranchSwapData {
    /// `f = sum alpha_k s1^{4-k} s2^{k-1} t1 + beta_k s1^{4-k} s2^{k-1} t2`
    /// and its image `g` under `sigma`.
    pub fn forms(&self) -> Result<(MultiPoly, MultiPoly)> {
        let ctx = k3_base();
        let mut f = MultiPoly::zero(&ctx);
        for k in 0..4 {
            let m = parse_poly(&format!("s1^{}*s2^{}", 3 - k, k), &ctx)?;
            f += &(&m * &MultiPoly::var(&ctx, "t1")?).scale(&self.alpha[k]);
            f += &(&m * &MultiPoly::var(&ctx, "t2")?).scale(&self.beta[k]);
        }
        let g = swapped_form(self)?;
        Ok((f, g))
    }

    pub fn branch(&self) -> Result<BranchData> {
        let (f, g) = self.forms()?;
        BranchData::k3(&f, &g)
    }

    /// True when `sigma` sends `f` to `g` and `g` back to `f`.
    pub fn swaps(&self) -> Result<bool> {
        let (f, g) = self.forms()?;
        let s = sigma_base();
        Ok(s.act(&f)? == g && s.act(&g)? == f)
    }
}

/// `g = -a1 s1 t1^3 + a2 s1 t1^2 t2 - a3 s1 t1 t2^2 + a4 s1 t2^3
///      + b1 s2 t1^3 - b2 s2 t1^2 t2 + b3 s2 t1 t2^2 - b4 s2 t2^3`.
fn swapped_form(data: &BranchSwapData) -> Result<MultiPoly> {
    let ctx = k3_base();
    let mut g = MultiPoly::zero(&ctx);
    for k in 0..4 {
        let sign = if k % 2 == 0 { -1 } else { 1 };
        let tt = format!("t1^{}*t2^{}", 3 - k, k);
        let a = parse_poly(&format!("s1*{tt}"), &ctx)?.scale_int(sign);
        let b = parse_poly(&format!("s2*{tt}"), &ctx)?.scale_int(-sign);
        g += &a.scale(&data.alpha[k]);
        g += &b.scale(&data.beta[k]);
    }
    Ok(g)
}

/// `a1 l^4 + (a2 - b1) l^3 + (a3 - b2) l^2 + (a4 - b3) l - b4`, whose roots
/// give the fixed points `(l, 1, -1, -1/l, 0, ..., 0)` on `T`.
pub fn fixed_quartic(data: &BranchSwapData) -> UniPoly {
    let (a, b) = (&data.alpha, &data.beta);
    UniPoly::new(vec![
        -b[3].clone(),
        &a[3] - &b[2],
        &a[2] - &b[1],
        &a[1] - &b[0],
        a[0].clone(),
    ])
}

/// `(l, 1, -1, -1/l, 0, 0, 0, 0, 0)`.
pub fn candidate_point(lambda: &GaussianRational) -> Result<Vec<GaussianRational>> {
    let inv = lambda
        .inv()
        .ok_or_else(|| Error::Domain("lambda = 0 gives no point".into()))?;
    let mut p = vec![GaussianRational::zero(); 9];
    p[0] = lambda.clone();
    p[1] = GaussianRational::from_integer(1);
    p[2] = GaussianRational::from_integer(-1);
    p[3] = -inv;
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedPointCheck {
    pub on_variety: bool,
    pub witness: Option<FixedWitness>,
}

impl FixedPointCheck {
    pub fn passed(&self) -> bool {
        self.on_variety && self.witness.is_some()
    }
}

/// Evaluates every equation of `variety` at `point` and runs the weighted
/// fixedness test for `spec`.
pub fn verify_fixed_point(
    variety: &VarietyPresentation,
    point: &[GaussianRational],
    spec: &InvolutionSpec,
) -> Result<FixedPointCheck> {
    let weights = variety
        .ambient
        .weights()
        .ok_or_else(|| Error::Contract("fixed points need a graded ambient".into()))?
        .to_vec();
    let witness = fixed_witness(spec, &weights, point)?;
    let mut on_variety = true;
    for e in &variety.equations {
        on_variety &= e.evaluate(point)?.is_zero();
    }
    Ok(FixedPointCheck { on_variety, witness })
}

#[derive(Debug, Clone, Serialize)]
pub struct K3InvolutionReport {
    pub branch_swapped: bool,
    pub preserves_t: bool,
    pub equivariant: bool,
    pub quartic: String,
}

impl K3InvolutionReport {
    pub fn passed(&self) -> bool {
        self.branch_swapped && self.preserves_t && self.equivariant
    }
}

/// Builds `T` from the data and checks that `sigma` preserves it.
pub fn check_k3_involution(data: &BranchSwapData) -> Result<(VarietyPresentation, K3InvolutionReport)> {
    let t = construct_k3(&data.branch()?)?;
    let s = sigma_t();
    let mut preserves_t = true;
    for e in &t.equations {
        preserves_t &= t.pullback_vanishes(&s.act(e)?)?;
    }
    let report = K3InvolutionReport {
        branch_swapped: data.swaps()?,
        preserves_t,
        equivariant: equivariance_failures(&t.parametrization, &s, &sigma_t_cover())?.is_empty(),
        quartic: fixed_quartic(data).to_string(),
    };
    Ok((t, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn engineered() -> BranchSwapData {
        let z = || q("0");
        BranchSwapData {
            alpha: [q("1"), z(), z(), z()],
            beta: [z(), z(), z(), q("1")],
        }
    }

    #[test]
    fn template_is_swapped() {
        let mut rng = Sampler::new(3);
        let data = BranchSwapData {
            alpha: std::array::from_fn(|_| rng.scalar()),
            beta: std::array::from_fn(|_| rng.scalar()),
        };
        assert!(data.swaps().unwrap());
        let (_, r) = check_k3_involution(&data).unwrap();
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn engineered_root_is_fixed_with_mu_i() {
        let data = engineered();
        assert_eq!(fixed_quartic(&data).to_string(), fixed_quartic_text());
        let (t, report) = check_k3_involution(&data).unwrap();
        assert!(report.passed());
        let s = sigma_t();
        let ok = verify_fixed_point(&t, &candidate_point(&q("1")).unwrap(), &s).unwrap();
        assert!(ok.on_variety);
        assert!(ok.witness.unwrap().has_mu(&GaussianRational::i()));
        let bad = verify_fixed_point(&t, &candidate_point(&q("2")).unwrap(), &s).unwrap();
        assert!(!bad.on_variety);
        assert_eq!(fixed_quartic(&data).evaluate(&q("2")), q("15"));
    }

    fn fixed_quartic_text() -> String {
        UniPoly::new(vec![q("-1"), q("0"), q("0"), q("0"), q("1")]).to_string()
    }

    #[test]
    fn non_fixed_point_of_the_minor() {
        let s = sigma_t();
        let mut p = vec![q("1"); 4];
        p.extend(vec![q("0"); 5]);
        assert!(fixed_witness(&s, &[2, 2, 2, 2, 3, 3, 3, 3, 4], &p).unwrap().is_none());
        // alternating signs are an eigenvector of sigma after all
        let p: Vec<_> = ["1", "-1", "1", "-1", "0", "0", "0", "0", "0"].iter().map(|x| q(x)).collect();
        assert!(fixed_witness(&s, &[2, 2, 2, 2, 3, 3, 3, 3, 4], &p).unwrap().is_some());
    }

    #[test]
    fn zero_quartic_for_zero_data() {
        let z = BranchSwapData {
            alpha: std::array::from_fn(|_| q("0")),
            beta: std::array::from_fn(|_| q("0")),
        };
        assert!(fixed_quartic(&z).is_zero());
        assert!(z.branch().is_err());
    }
}
