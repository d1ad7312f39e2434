//! Double-cover algebras `B[u, v] / (u^2 - U, v^2 - V)` and their normal forms.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::context::same_context;
use crate::algebra::{Ctx, Monomial, MultiPoly};
use crate::error::{Error, Result};

/// An element written as `c0 + cu*u + cv*v + cuv*u*v` with coefficients
/// free of `u` and `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub c0: MultiPoly,
    pub cu: MultiPoly,
    pub cv: MultiPoly,
    pub cuv: MultiPoly,
}

impl NormalForm {
    fn zero(ctx: &Ctx) -> Self {
        let z = MultiPoly::zero(ctx);
        Self {
            c0: z.clone(),
            cu: z.clone(),
            cv: z.clone(),
            cuv: z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.c0.is_zero() && self.cu.is_zero() && self.cv.is_zero() && self.cuv.is_zero()
    }

    pub fn components(&self) -> [&MultiPoly; 4] {
        [&self.c0, &self.cu, &self.cv, &self.cuv]
    }

    fn add_scaled(&mut self, other: &NormalForm, by: &MultiPoly) {
        for (mine, theirs) in [
            (&mut self.c0, &other.c0),
            (&mut self.cu, &other.cu),
            (&mut self.cv, &other.cv),
            (&mut self.cuv, &other.cuv),
        ] {
            if !theirs.is_zero() {
                *mine += &(theirs * by);
            }
        }
    }
}

impl fmt::Debug for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) + ({})*u + ({})*v + ({})*u*v",
            self.c0, self.cu, self.cv, self.cuv
        )
    }
}

/// A ring with two distinguished variables `u`, `v` whose squares are
/// rewritten. The squares may involve `u` and `v` linearly but not `u*v`,
/// which covers both `u^2 = f(s)` and `u^2 = y1 - 2*a*v`.
#[derive(Clone)]
pub struct CoverAlgebra {
    ctx: Ctx,
    u: usize,
    v: usize,
    u_square: NormalForm,
    v_square: NormalForm,
}

impl CoverAlgebra {
    pub fn new(ctx: &Ctx, u: &str, v: &str, u_square: &MultiPoly, v_square: &MultiPoly) -> Result<Self> {
        let (ui, vi) = (ctx.index_of(u)?, ctx.index_of(v)?);
        let split = |p: &MultiPoly, which: &str| -> Result<NormalForm> {
            if !same_context(p.ctx(), ctx) {
                return Err(Error::ContextMismatch(format!("{which}^2 lives in another ring")));
            }
            let mut nf = NormalForm::zero(ctx);
            for (m, c) in p.terms() {
                let e = m.exponents();
                let mut rest = m.exponents().to_vec();
                rest[ui] = 0;
                rest[vi] = 0;
                let term = MultiPoly::monomial(ctx, Monomial(rest.into_iter().collect()), c.clone());
                match (e[ui], e[vi]) {
                    (0, 0) => nf.c0 += &term,
                    (1, 0) => nf.cu += &term,
                    (0, 1) => nf.cv += &term,
                    _ => {
                        return Err(Error::Contract(format!(
                            "{which}^2 = {p} must be at most linear in {u}, {v} without a {u}*{v} term"
                        )))
                    }
                }
            }
            Ok(nf)
        };
        Ok(Self {
            u_square: split(u_square, u)?,
            v_square: split(v_square, v)?,
            ctx: ctx.clone(),
            u: ui,
            v: vi,
        })
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn u_index(&self) -> usize {
        self.u
    }

    pub fn v_index(&self) -> usize {
        self.v
    }

    /// Normal form of `u^i v^j`, memoized in `memo`.
    fn power(&self, i: u16, j: u16, memo: &mut HashMap<(u16, u16), NormalForm>) -> NormalForm {
        if let Some(nf) = memo.get(&(i, j)) {
            return nf.clone();
        }
        let mut out = NormalForm::zero(&self.ctx);
        let one = MultiPoly::one(&self.ctx);
        match (i, j) {
            (0, 0) => out.c0 = one,
            (1, 0) => out.cu = one,
            (0, 1) => out.cv = one,
            (1, 1) => out.cuv = one,
            _ if i >= 2 => {
                let sq = &self.u_square;
                if !sq.c0.is_zero() {
                    let t = self.power(i - 2, j, memo);
                    out.add_scaled(&t, &sq.c0);
                }
                if !sq.cu.is_zero() {
                    let t = self.power(i - 1, j, memo);
                    out.add_scaled(&t, &sq.cu);
                }
                if !sq.cv.is_zero() {
                    let t = self.power(i - 2, j + 1, memo);
                    out.add_scaled(&t, &sq.cv);
                }
            }
            _ => {
                let sq = &self.v_square;
                if !sq.c0.is_zero() {
                    let t = self.power(i, j - 2, memo);
                    out.add_scaled(&t, &sq.c0);
                }
                if !sq.cv.is_zero() {
                    let t = self.power(i, j - 1, memo);
                    out.add_scaled(&t, &sq.cv);
                }
                if !sq.cu.is_zero() {
                    let t = self.power(i + 1, j - 2, memo);
                    out.add_scaled(&t, &sq.cu);
                }
            }
        }
        memo.insert((i, j), out.clone());
        out
    }

    /// Rewrites `u^2` and `v^2` to exhaustion.
    pub fn reduce(&self, p: &MultiPoly) -> Result<NormalForm> {
        if !same_context(p.ctx(), &self.ctx) {
            return Err(Error::ContextMismatch(format!("{p} is not in the cover ring")));
        }
        let mut groups: HashMap<(u16, u16), Vec<(Monomial, crate::algebra::GaussianRational)>> =
            HashMap::new();
        for (m, c) in p.terms() {
            let e = m.exponents();
            let key = (e[self.u], e[self.v]);
            let mut rest = e.to_vec();
            rest[self.u] = 0;
            rest[self.v] = 0;
            groups
                .entry(key)
                .or_default()
                .push((Monomial(rest.into_iter().collect()), c.clone()));
        }
        let mut keys: Vec<_> = groups.keys().copied().collect();
        keys.sort_unstable();
        let mut memo = HashMap::new();
        let mut out = NormalForm::zero(&self.ctx);
        for key in keys {
            let coeff = MultiPoly::from_terms(&self.ctx, groups.remove(&key).unwrap());
            let nf = self.power(key.0, key.1, &mut memo);
            out.add_scaled(&nf, &coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, VariableContext};

    #[test]
    fn squares_rewrite_to_branch_forms() {
        let ctx = VariableContext::graded(&[("s1", 1), ("s2", 1), ("u", 2), ("v", 2)]).unwrap();
        let p = |t: &str| parse_poly(t, &ctx).unwrap();
        let f = p("s1^4 + s2^4");
        let g = p("s1^3*s2 - 2*s2^4");
        let alg = CoverAlgebra::new(&ctx, "u", "v", &f, &g).unwrap();
        let nf = alg.reduce(&p("u^2")).unwrap();
        assert_eq!(nf.c0, f);
        assert!(nf.cu.is_zero() && nf.cuv.is_zero());
        let nf = alg.reduce(&p("u^3*v")).unwrap();
        assert_eq!(nf.cuv, f);
        assert!(nf.c0.is_zero());
        assert!(alg.reduce(&p("u^2*v^2 - (s1^4 + s2^4)*(s1^3*s2 - 2*s2^4)")).unwrap().is_zero());
    }

    #[test]
    fn linear_squares_terminate() {
        let ctx = VariableContext::ungraded(&["a", "d", "y1", "y3", "u", "v"]).unwrap();
        let p = |t: &str| parse_poly(t, &ctx).unwrap();
        let alg = CoverAlgebra::new(&ctx, "u", "v", &p("y1 - 2*a*v"), &p("y3 - 2*d*u")).unwrap();
        // compare with direct evaluation at a point satisfying both relations
        let nf = alg.reduce(&p("u^3*v^2 + u*v^4")).unwrap();
        let back = &(&nf.c0 + &(&nf.cu * &p("u"))) + &(&(&nf.cv * &p("v")) + &(&nf.cuv * &p("u*v")));
        let diff = &back - &p("u^3*v^2 + u*v^4");
        // substituting y1 = u^2 + 2av, y3 = v^2 + 2du kills the difference
        let sub = crate::algebra::RingMap::from_text(
            &ctx,
            &ctx,
            &[("y1", "u^2 + 2*a*v"), ("y3", "v^2 + 2*d*u")],
        )
        .unwrap();
        assert!(sub.substitute(&diff).unwrap().is_zero());
        assert!(nf.components().iter().all(|c| c.degree_in(4) == 0 && c.degree_in(5) == 0));
    }

    #[test]
    fn rejects_uv_in_square() {
        let ctx = VariableContext::ungraded(&["s", "u", "v"]).unwrap();
        let p = |t: &str| parse_poly(t, &ctx).unwrap();
        assert!(CoverAlgebra::new(&ctx, "u", "v", &p("u*v"), &p("s")).is_err());
    }
}
