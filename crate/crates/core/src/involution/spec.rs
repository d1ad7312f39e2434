//! Monomial actions: each variable goes to a scalar multiple of a variable.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::context::same_context;
use crate::algebra::{parse_poly, Ctx, GaussianRational, MultiPoly, RingMap, UniPoly};
use crate::error::{Error, Result};

/// What `sigma o sigma` must be.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeclaredSquare {
    Identity,
    /// Every variable negated.
    Negation,
}

/// A degree-preserving action `x_j -> c_j x_{pi(j)}` on a variable context,
/// checked against its declared square on construction.
#[derive(Clone)]
pub struct InvolutionSpec {
    name: String,
    ctx: Ctx,
    images: Vec<(GaussianRational, usize)>,
    square: DeclaredSquare,
}

impl InvolutionSpec {
    /// Builds the action from `(variable, image)` texts such as `("u", "i*v")`.
    /// Unlisted variables are fixed.
    pub fn from_text(name: &str, ctx: &Ctx, rules: &[(&str, &str)], square: DeclaredSquare) -> Result<Self> {
        let mut images: Vec<(GaussianRational, usize)> =
            (0..ctx.len()).map(|j| (GaussianRational::one(), j)).collect();
        for (var, text) in rules {
            let j = ctx.index_of(var)?;
            let p = parse_poly(text, ctx)?;
            let mut terms = p.terms();
            let (Some((m, c)), None) = (terms.next(), terms.next()) else {
                return Err(Error::Contract(format!("image of `{var}` is not a single term: {p}")));
            };
            let e = m.exponents();
            let Some(k) = e.iter().position(|&x| x == 1).filter(|_| m.total_degree() == 1) else {
                return Err(Error::Contract(format!("image of `{var}` is not a multiple of a variable: {p}")));
            };
            images[j] = (c.clone(), k);
        }
        Self::new(name, ctx, images, square)
    }

    pub fn new(
        name: &str,
        ctx: &Ctx,
        images: Vec<(GaussianRational, usize)>,
        square: DeclaredSquare,
    ) -> Result<Self> {
        if images.len() != ctx.len() {
            return Err(Error::Contract(format!("{} images for {} variables", images.len(), ctx.len())));
        }
        for (j, (c, k)) in images.iter().enumerate() {
            if c.is_zero() || *k >= ctx.len() {
                return Err(Error::Contract(format!("image of `{}` is degenerate", ctx.name(j))));
            }
            if ctx.weight(j) != ctx.weight(*k) {
                return Err(Error::Contract(format!(
                    "`{}` and `{}` have different weights",
                    ctx.name(j),
                    ctx.name(*k)
                )));
            }
        }
        let spec = Self {
            name: name.to_string(),
            ctx: ctx.clone(),
            images,
            square,
        };
        let sq = spec.compose(&spec)?;
        let expected = match square {
            DeclaredSquare::Identity => Self::scalar(ctx, GaussianRational::one()),
            DeclaredSquare::Negation => Self::negation(ctx),
        };
        if sq.images != expected.images {
            return Err(Error::Contract(format!("{name} does not square to {square:?}")));
        }
        Ok(spec)
    }

    fn scalar(ctx: &Ctx, c: GaussianRational) -> Self {
        Self {
            name: "scalar".into(),
            ctx: ctx.clone(),
            images: (0..ctx.len()).map(|j| (c.clone(), j)).collect(),
            square: DeclaredSquare::Identity,
        }
    }

    /// `tau`: every variable negated.
    pub fn negation(ctx: &Ctx) -> Self {
        let mut s = Self::scalar(ctx, -GaussianRational::one());
        s.name = "tau".into();
        s
    }

    pub fn identity(ctx: &Ctx) -> Self {
        let mut s = Self::scalar(ctx, GaussianRational::one());
        s.name = "id".into();
        s
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn declared_square(&self) -> DeclaredSquare {
        self.square
    }

    /// `(c_j, pi(j))` for variable `j`.
    pub fn image_of(&self, j: usize) -> (&GaussianRational, usize) {
        (&self.images[j].0, self.images[j].1)
    }

    pub fn ring_map(&self) -> RingMap {
        let imgs = self
            .images
            .iter()
            .map(|(c, k)| MultiPoly::var_at(&self.ctx, *k).scale(c))
            .collect();
        RingMap::new(&self.ctx, &self.ctx, imgs).expect("monomial action is graded")
    }

    /// Substitutes the action into `p`.
    pub fn act(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if !same_context(p.ctx(), &self.ctx) {
            return Err(Error::ContextMismatch(format!("{} acts on another ring", self.name)));
        }
        let mut out = MultiPoly::zero(&self.ctx);
        for (m, c) in p.terms() {
            let (coeff, mono) = self.act_monomial(m.exponents());
            out += &MultiPoly::monomial(&self.ctx, mono, &coeff * c);
        }
        Ok(out)
    }

    fn act_monomial(&self, e: &[u16]) -> (GaussianRational, crate::algebra::Monomial) {
        let mut coeff = GaussianRational::one();
        let mut out = crate::algebra::Monomial::one(self.ctx.len());
        for (j, &k) in e.iter().enumerate() {
            if k > 0 {
                let (c, to) = &self.images[j];
                coeff = &coeff * &c.pow(k as u32);
                out.0[*to] += k;
            }
        }
        (coeff, out)
    }

    /// The action `x -> self(other(x))`.
    pub fn compose(&self, other: &InvolutionSpec) -> Result<InvolutionSpec> {
        if !same_context(&self.ctx, &other.ctx) {
            return Err(Error::ContextMismatch("composing actions on different rings".into()));
        }
        let images = other
            .images
            .iter()
            .map(|(c, k)| {
                let (c2, k2) = &self.images[*k];
                (c * c2, *k2)
            })
            .collect();
        Ok(InvolutionSpec {
            name: format!("{} o {}", self.name, other.name),
            ctx: self.ctx.clone(),
            images,
            square: DeclaredSquare::Identity,
        })
    }

    /// True when both actions send every variable to the same image.
    pub fn same_action(&self, other: &InvolutionSpec) -> bool {
        same_context(&self.ctx, &other.ctx) && self.images == other.images
    }

    /// The action on points: `sigma(p)_j = c_j p_{pi(j)}`.
    pub fn act_on_point(&self, p: &[GaussianRational]) -> Result<Vec<GaussianRational>> {
        if p.len() != self.ctx.len() {
            return Err(Error::Contract(format!(
                "point has {} coordinates, the ring has {} variables",
                p.len(),
                self.ctx.len()
            )));
        }
        Ok(self.images.iter().map(|(c, k)| c * &p[*k]).collect())
    }

    /// `Some(c)` when `act(p) = c p` with `p` nonzero.
    pub fn eigenvalue(&self, p: &MultiPoly) -> Result<Option<GaussianRational>> {
        let q = self.act(p)?;
        Ok(constant_ratio(&q, p))
    }

    /// Dimensions of the `+1` and `-1` eigenspaces on the span of a set of
    /// monomials permuted (up to scalars) by the action.
    pub fn eigenspace_dimensions(&self, basis: &[crate::algebra::Monomial]) -> Result<(usize, usize)> {
        let index = |m: &crate::algebra::Monomial| basis.iter().position(|b| b == m);
        let mut moves = Vec::with_capacity(basis.len());
        for m in basis {
            let (c, to) = self.act_monomial(m.exponents());
            let Some(k) = index(&to) else {
                return Err(Error::Contract(format!(
                    "{} moves {} outside the span",
                    self.name,
                    m.render(&self.ctx)
                )));
            };
            moves.push((c, k));
        }
        let dim = |lambda: GaussianRational| -> Result<usize> {
            let mut sys = crate::algebra::SparseSystem::new(basis.len());
            for row in 0..basis.len() {
                let mut entries = vec![(row, -lambda.clone())];
                for (j, (c, k)) in moves.iter().enumerate() {
                    if *k == row {
                        entries.push((j, c.clone()));
                    }
                }
                sys.push_row(entries, GaussianRational::zero())?;
            }
            Ok(match sys.solve() {
                crate::algebra::LinearSolution::Underdetermined { nullspace, .. } => nullspace.len(),
                _ => 0,
            })
        };
        Ok((dim(GaussianRational::one())?, dim(-GaussianRational::one())?))
    }
}

impl fmt::Debug for InvolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for InvolutionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(j, (c, k))| !(c.is_one() && k == j))
            .map(|(j, (c, k))| {
                let img = MultiPoly::var_at(&self.ctx, *k).scale(c);
                format!("{} -> {}", self.ctx.name(j), img)
            })
            .collect();
        write!(f, "{}: {}", self.name, parts.join(", "))
    }
}

/// `Some(c)` with `q = c p`, for `p` nonzero.
pub fn constant_ratio(q: &MultiPoly, p: &MultiPoly) -> Option<GaussianRational> {
    let (pm, pc) = p.leading()?;
    let c = &q.coefficient(pm) / pc;
    (p.scale(&c) == *q).then_some(c)
}

/// A scalar `mu` with `sigma(p)_j = mu^{w_j} p_j`: the monic gcd of the
/// binomials `x^{w_j} - r_j`, and its roots in Q(i).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedWitness {
    pub mu_polynomial: String,
    pub mu_candidates: Vec<GaussianRational>,
}

impl FixedWitness {
    pub fn has_mu(&self, mu: &GaussianRational) -> bool {
        self.mu_candidates.contains(mu)
    }
}

/// Weighted fixedness from the ratios `r_j = sigma(p)_j / p_j` over the
/// nonzero coordinates.
pub fn witness_from_ratios(ratios: &[(u32, GaussianRational)]) -> Option<FixedWitness> {
    let mut acc: Option<UniPoly> = None;
    for (w, r) in ratios {
        let b = UniPoly::binomial(*w as usize, r);
        acc = Some(match acc {
            None => b.monic(),
            Some(a) => a.gcd(&b),
        });
    }
    let g = acc?;
    if g.degree().unwrap_or(0) == 0 {
        return None;
    }
    let mut mu_candidates = g.roots_of_low_degree();
    mu_candidates.sort_by_key(|c| c.to_string());
    Some(FixedWitness {
        mu_polynomial: g.to_string(),
        mu_candidates,
    })
}

/// Fixedness of a point of a weighted projective space under `spec`.
/// `Err` for the zero vector.
pub fn fixed_witness(spec: &InvolutionSpec, weights: &[u32], p: &[GaussianRational]) -> Result<Option<FixedWitness>> {
    if p.iter().all(Zero::is_zero) {
        return Err(Error::Contract("the zero vector is not a point".into()));
    }
    let q = spec.act_on_point(p)?;
    let mut ratios = Vec::new();
    for (j, (pj, qj)) in p.iter().zip(&q).enumerate() {
        if pj.is_zero() {
            if !qj.is_zero() {
                return Ok(None);
            }
        } else {
            ratios.push((weights[j], qj / pj));
        }
    }
    Ok(witness_from_ratios(&ratios))
}

/// Fixedness of a family of points given by polynomial coordinates for the
/// leading variables of the ring; the ratios must be constants for the
/// family to be fixed pointwise.
pub fn fixed_witness_symbolic(
    spec: &InvolutionSpec,
    weights: &[u32],
    coords: &[MultiPoly],
) -> Result<Option<FixedWitness>> {
    if coords.iter().all(MultiPoly::is_zero) {
        return Err(Error::Contract("the zero vector is not a point".into()));
    }
    let mut ratios = Vec::new();
    for (j, pj) in coords.iter().enumerate() {
        let (c, k) = spec.image_of(j);
        let Some(src) = coords.get(k) else {
            return Err(Error::Contract(format!(
                "{} moves a listed coordinate outside the list",
                spec.name()
            )));
        };
        let qj = src.scale(c);
        if pj.is_zero() {
            if !qj.is_zero() {
                return Ok(None);
            }
            continue;
        }
        match constant_ratio(&qj, pj) {
            Some(r) => ratios.push((weights[j], r)),
            None => return Ok(None),
        }
    }
    Ok(witness_from_ratios(&ratios))
}

/// Variables `x` of the source with `map(source(x)) != target(map(x))`.
pub fn equivariance_failures(
    map: &RingMap,
    source: &InvolutionSpec,
    target: &InvolutionSpec,
) -> Result<Vec<String>> {
    let mut bad = Vec::new();
    for (j, name) in map.source().names().iter().enumerate() {
        let x = MultiPoly::var_at(map.source(), j);
        let lhs = map.substitute(&source.act(&x)?)?;
        let rhs = target.act(&map.substitute(&x)?)?;
        if lhs != rhs {
            bad.push(name.clone());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::VariableContext;

    fn ring() -> Ctx {
        VariableContext::graded(&[("s1", 1), ("s2", 1), ("u", 2), ("v", 2)]).unwrap()
    }

    #[test]
    fn parses_and_acts() {
        let ctx = ring();
        let s = InvolutionSpec::from_text(
            "sigma",
            &ctx,
            &[("s1", "i*s1"), ("s2", "-i*s2"), ("u", "i*v"), ("v", "i*u")],
            DeclaredSquare::Negation,
        )
        .unwrap();
        let p = parse_poly("u^2 + s1*s2*v", &ctx).unwrap();
        assert_eq!(s.act(&p).unwrap(), parse_poly("-v^2 + i*s1*s2*u", &ctx).unwrap());
        assert!(s.compose(&s).unwrap().same_action(&InvolutionSpec::negation(&ctx)));
    }

    #[test]
    fn rejects_wrong_square_and_weights() {
        let ctx = ring();
        let bad = InvolutionSpec::from_text("x", &ctx, &[("s1", "i*s1")], DeclaredSquare::Identity);
        assert!(bad.is_err());
        let bad = InvolutionSpec::from_text("x", &ctx, &[("s1", "u")], DeclaredSquare::Identity);
        assert!(bad.is_err());
        let bad = InvolutionSpec::from_text("x", &ctx, &[("s1", "s1*s2")], DeclaredSquare::Identity);
        assert!(bad.is_err());
    }

    #[test]
    fn witness_of_scaled_point() {
        let ctx = ring();
        let tau = InvolutionSpec::negation(&ctx);
        let pt = |xs: [&str; 4]| -> Vec<GaussianRational> { xs.iter().map(|s| s.parse().unwrap()).collect() };
        let w = fixed_witness(&tau, &[1, 1, 2, 2], &pt(["1", "2", "0", "0"])).unwrap().unwrap();
        assert_eq!(w.mu_candidates, vec![GaussianRational::from_integer(-1)]);
        assert!(fixed_witness(&tau, &[1, 1, 2, 2], &pt(["1", "2", "3", "0"])).unwrap().is_none());
        let zero = vec![GaussianRational::zero(); 4];
        assert!(fixed_witness(&tau, &[1, 1, 2, 2], &zero).is_err());
    }

    #[test]
    fn eigenspaces_of_a_swap() {
        let ctx = ring();
        let s = InvolutionSpec::from_text("swap", &ctx, &[("u", "v"), ("v", "u")], DeclaredSquare::Identity).unwrap();
        let basis: Vec<_> = crate::algebra::poly::monomials_of_degree(&ctx, &[2, 3], 2);
        assert_eq!(s.eigenspace_dimensions(&basis).unwrap(), (1, 1));
    }
}
