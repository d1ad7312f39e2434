//! Rewriting forms on P^1 and on P^1 x P^1 in Veronese or Segre coordinates.
//!
//! A form of even degree in `s1, s2` is written in `y1 = s1^2, y2 = s1*s2,
//! y3 = s2^2`; a form of bidegree `(n, n)` in `(s1, s2; t1, t2)` is written in
//! `y1 = s1*t1, y2 = s2*t1, y3 = s1*t2, y4 = s2*t2`. Such a rendering is only
//! unique modulo the quadric relation, so a fixed greedy rule picks one.

use crate::algebra::{Ctx, GaussianRational, Monomial, MultiPoly, RingMap, VariableContext};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderKind {
    Veronese,
    Segre,
}

/// A rendering from a base ring into coordinates of an ambient ring.
#[derive(Clone)]
pub struct RenderTarget {
    kind: RenderKind,
    base: Ctx,
    /// `[s1, s2]` or `[s1, s2, t1, t2]` as indices into `base`.
    base_vars: Vec<usize>,
    ambient: Ctx,
    /// `y`-coordinates as indices into `ambient`.
    y_vars: Vec<usize>,
    /// Private context holding just the `y`-coordinates, for pullbacks.
    y_ctx: Ctx,
    pullback: RingMap,
}

impl RenderTarget {
    /// Veronese rendering of forms in `s = [s1, s2]` of `base` into
    /// `y = [y1, y2, y3]` of `ambient`.
    pub fn veronese(base: &Ctx, s: [&str; 2], ambient: &Ctx, y: [&str; 3]) -> Result<Self> {
        let images = [
            format!("{}^2", s[0]),
            format!("{}*{}", s[0], s[1]),
            format!("{}^2", s[1]),
        ];
        Self::build(RenderKind::Veronese, base, &s, ambient, &y, &images)
    }

    /// Segre rendering of forms in `s = [s1, s2]`, `t = [t1, t2]` of `base`
    /// into `y = [y1, y2, y3, y4]` of `ambient`.
    pub fn segre(base: &Ctx, s: [&str; 2], t: [&str; 2], ambient: &Ctx, y: [&str; 4]) -> Result<Self> {
        let images = [
            format!("{}*{}", s[0], t[0]),
            format!("{}*{}", s[1], t[0]),
            format!("{}*{}", s[0], t[1]),
            format!("{}*{}", s[1], t[1]),
        ];
        let vars = [s[0], s[1], t[0], t[1]];
        Self::build(RenderKind::Segre, base, &vars, ambient, &y, &images)
    }

    fn build(
        kind: RenderKind,
        base: &Ctx,
        base_names: &[&str],
        ambient: &Ctx,
        y_names: &[&str],
        images: &[String],
    ) -> Result<Self> {
        let base_vars = base_names
            .iter()
            .map(|n| base.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        let y_vars = y_names
            .iter()
            .map(|n| ambient.index_of(n))
            .collect::<Result<Vec<_>>>()?;
        let y_ctx = VariableContext::ungraded(y_names)?;
        let assignments: Vec<(&str, &str)> = y_names
            .iter()
            .zip(images)
            .map(|(y, img)| (*y, img.as_str()))
            .collect();
        let pullback = RingMap::from_text(&y_ctx, base, &assignments)?;
        Ok(Self {
            kind,
            base: base.clone(),
            base_vars,
            ambient: ambient.clone(),
            y_vars,
            y_ctx,
            pullback,
        })
    }

    pub fn kind(&self) -> RenderKind {
        self.kind
    }

    pub fn base(&self) -> &Ctx {
        &self.base
    }

    pub fn ambient(&self) -> &Ctx {
        &self.ambient
    }

    /// The quadric relation among the `y`-coordinates, in the ambient ring:
    /// `y1*y3 - y2^2` or `y1*y4 - y2*y3`.
    pub fn relation(&self) -> MultiPoly {
        let y = |k: usize| MultiPoly::var_at(&self.ambient, self.y_vars[k]);
        match self.kind {
            RenderKind::Veronese => &y(0) * &y(2) - &y(1) * &y(1),
            RenderKind::Segre => &y(0) * &y(3) - &y(1) * &y(2),
        }
    }

    /// Exponents of the base variables in a monomial, failing if any other
    /// base variable occurs.
    fn base_exponents(&self, m: &Monomial, p: &MultiPoly) -> Result<Vec<u16>> {
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 && !self.base_vars.contains(&i) {
                return Err(Error::Contract(format!(
                    "cannot render {p}: variable `{}` is not a rendering coordinate",
                    self.base.name(i)
                )));
            }
        }
        Ok(self.base_vars.iter().map(|&i| m.exponents()[i]).collect())
    }

    /// Checks the shape of one monomial, returning the y-degree it renders to.
    fn check_monomial(&self, e: &[u16], m: &Monomial) -> Result<u16> {
        match self.kind {
            RenderKind::Veronese => {
                let d = e[0] + e[1];
                if d % 2 == 1 {
                    return Err(Error::Contract(format!(
                        "Veronese rendering impossible: monomial {} has odd degree",
                        m.render(&self.base)
                    )));
                }
                Ok(d / 2)
            }
            RenderKind::Segre => {
                if e[0] + e[1] != e[2] + e[3] {
                    return Err(Error::Contract(format!(
                        "Segre rendering impossible: monomial {} has unbalanced bidegree ({}, {})",
                        m.render(&self.base),
                        e[0] + e[1],
                        e[2] + e[3]
                    )));
                }
                Ok(e[0] + e[1])
            }
        }
    }

    /// Greedy exponents of `y1, y2, …` for a base monomial.
    fn greedy(&self, e: &[u16]) -> Vec<u16> {
        match self.kind {
            RenderKind::Veronese => {
                let (a, b) = (e[0], e[1]);
                let y1 = a / 2;
                let y2 = a % 2;
                let y3 = (b - y2) / 2;
                vec![y1, y2, y3]
            }
            RenderKind::Segre => {
                let (a, b, c, d) = (e[0], e[1], e[2], e[3]);
                let y1 = a.min(c);
                let y2 = b.min(c - y1);
                let y3 = (a - y1).min(d);
                let y4 = d - y3;
                vec![y1, y2, y3, y4]
            }
        }
    }

    /// Every `y`-exponent vector pulling back to the given base exponents.
    fn all_renderings(&self, e: &[u16]) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        match self.kind {
            RenderKind::Veronese => {
                let (a, b) = (e[0], e[1]);
                // 2*y1 + y2 = a, y2 + 2*y3 = b
                for y2 in (a % 2..=a.min(b)).step_by(2) {
                    if (b - y2) % 2 == 0 {
                        out.push(vec![(a - y2) / 2, y2, (b - y2) / 2]);
                    }
                }
            }
            RenderKind::Segre => {
                let (a, b, c, d) = (e[0], e[1], e[2], e[3]);
                // y1 + y3 = a, y2 + y4 = b, y1 + y2 = c, y3 + y4 = d
                for y1 in 0..=a.min(c) {
                    let (y3, y2) = (a - y1, c - y1);
                    if y2 <= b && y3 <= d && b - y2 == d - y3 {
                        out.push(vec![y1, y2, y3, b - y2]);
                    }
                }
            }
        }
        out
    }

    fn y_monomial(&self, ye: &[u16]) -> Monomial {
        let mut m = Monomial::one(self.ambient.len());
        for (k, &e) in ye.iter().enumerate() {
            m.0[self.y_vars[k]] = e;
        }
        m
    }

    fn check_context(&self, p: &MultiPoly) -> Result<()> {
        if !crate::algebra::context::same_context(p.ctx(), &self.base) {
            return Err(Error::ContextMismatch(format!(
                "render: polynomial over [{}], expected base [{}]",
                p.ctx().names().join(","),
                self.base.names().join(",")
            )));
        }
        Ok(())
    }

    /// Renders `p` in the ambient `y`-coordinates by the greedy rule.
    pub fn render(&self, p: &MultiPoly) -> Result<MultiPoly> {
        self.check_context(p)?;
        let mut degree = None;
        let mut terms = Vec::with_capacity(p.len());
        for (m, c) in p.terms() {
            let e = self.base_exponents(m, p)?;
            let d = self.check_monomial(&e, m)?;
            if *degree.get_or_insert(d) != d {
                return Err(Error::Contract(format!("cannot render inhomogeneous {p}")));
            }
            terms.push((self.y_monomial(&self.greedy(&e)), c.clone()));
        }
        Ok(MultiPoly::from_terms(&self.ambient, terms))
    }

    /// Pulls an ambient polynomial in the `y`-coordinates back to the base.
    pub fn pullback(&self, q: &MultiPoly) -> Result<MultiPoly> {
        let local = q.embed(&self.y_ctx).map_err(|_| {
            Error::Contract(format!("{q} involves coordinates other than the rendering ones"))
        })?;
        self.pullback.substitute(&local)
    }

    /// True when every alternative rendering of every monomial differs
    /// from the greedy one by something that pulls back to zero.
    pub fn verify_render_ambiguity(&self, p: &MultiPoly) -> Result<bool> {
        let canonical = self.render(p)?;
        for (m, c) in p.terms() {
            let e = self.base_exponents(m, p)?;
            let greedy = self.greedy(&e);
            for alt in self.all_renderings(&e) {
                if alt == greedy {
                    continue;
                }
                let swap = MultiPoly::monomial(&self.ambient, self.y_monomial(&alt), c.clone())
                    - MultiPoly::monomial(&self.ambient, self.y_monomial(&greedy), c.clone());
                let alternative = &canonical + &swap;
                if !self.pullback(&(&alternative - &canonical))?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(self.pullback(&canonical)? == *p)
    }

    /// Number of distinct renderings of a base monomial.
    pub fn rendering_count(&self, m: &Monomial) -> usize {
        let e: Vec<u16> = self.base_vars.iter().map(|&i| m.exponents()[i]).collect();
        self.all_renderings(&e).len()
    }

    /// For a Segre target: `t1*f = s1*q + s2*q'` for `f` of bidegree (3,1),
    /// with `q, q'` of bidegree (2,2).
    pub fn split_bihomogeneous(&self, f: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        if self.kind != RenderKind::Segre {
            return Err(Error::Contract("splitting needs a Segre target".into()));
        }
        self.check_context(f)?;
        for (m, _) in f.terms() {
            let e = self.base_exponents(m, f)?;
            if (e[0] + e[1], e[2] + e[3]) != (3, 1) {
                return Err(Error::Contract(format!(
                    "split needs bidegree (3,1), found monomial {}",
                    m.render(&self.base)
                )));
            }
        }
        let [s1, s2, t1, _] = [self.base_vars[0], self.base_vars[1], self.base_vars[2], self.base_vars[3]];
        Ok(split(f, t1, s1, s2, SplitPreference::First))
    }
}

/// Which slot receives monomials divisible by both splitting variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitPreference {
    First,
    Second,
}

/// Writes `x * f = x1 * q + x2 * q'`, where `x`, `x1`, `x2` are variable
/// indices. With `First`, monomials of `x*f` divisible by `x1` go to `q`;
/// the rest must be divisible by `x2`. Panics if some monomial is
/// divisible by neither.
pub fn split(
    f: &MultiPoly,
    x: usize,
    x1: usize,
    x2: usize,
    pref: SplitPreference,
) -> (MultiPoly, MultiPoly) {
    let ctx = f.ctx();
    let n = ctx.len();
    let (a, b) = match pref {
        SplitPreference::First => (x1, x2),
        SplitPreference::Second => (x2, x1),
    };
    let mut slot_a: Vec<(Monomial, GaussianRational)> = Vec::new();
    let mut slot_b: Vec<(Monomial, GaussianRational)> = Vec::new();
    let shifted = f.mul_monomial(&Monomial::var(n, x));
    for (m, c) in shifted.terms() {
        if let Some(q) = m.div(&Monomial::var(n, a)) {
            slot_a.push((q, c.clone()));
        } else {
            let q = m
                .div(&Monomial::var(n, b))
                .expect("monomial divisible by neither splitting variable");
            slot_b.push((q, c.clone()));
        }
    }
    let (pa, pb) = (MultiPoly::from_terms(ctx, slot_a), MultiPoly::from_terms(ctx, slot_b));
    match pref {
        SplitPreference::First => (pa, pb),
        SplitPreference::Second => (pb, pa),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn veronese() -> RenderTarget {
        let base = VariableContext::graded(&[("s1", 1), ("s2", 1)]).unwrap();
        let amb = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2)]).unwrap();
        RenderTarget::veronese(&base, ["s1", "s2"], &amb, ["y1", "y2", "y3"]).unwrap()
    }

    fn segre() -> RenderTarget {
        let base = VariableContext::graded(&[("s1", 1), ("s2", 1), ("t1", 1), ("t2", 1)]).unwrap();
        let amb = VariableContext::graded(&[("y1", 2), ("y2", 2), ("y3", 2), ("y4", 2)]).unwrap();
        RenderTarget::segre(&base, ["s1", "s2"], ["t1", "t2"], &amb, ["y1", "y2", "y3", "y4"]).unwrap()
    }

    #[test]
    fn veronese_examples() {
        let v = veronese();
        let p = |s: &str| parse_poly(s, v.base()).unwrap();
        assert_eq!(v.render(&p("s1^4")).unwrap().to_string(), "y1^2");
        assert_eq!(v.render(&p("s1^2*s2^2")).unwrap().to_string(), "y1*y3");
        assert_eq!(v.render(&p("s1^3*s2")).unwrap().to_string(), "y1*y2");
        assert_eq!(v.render(&p("s1*s2^3")).unwrap().to_string(), "y2*y3");
        assert!(v.pullback(&v.relation()).unwrap().is_zero());
        assert!(v.render(&p("s1^3")).is_err());
        assert_eq!(v.rendering_count(p("s1^2*s2^2").leading().unwrap().0), 2);
    }

    #[test]
    fn segre_examples() {
        let s = segre();
        let p = |t: &str| parse_poly(t, s.base()).unwrap();
        assert_eq!(s.render(&p("s1*s2*t1*t2")).unwrap().to_string(), "y1*y4");
        assert!(s.pullback(&s.relation()).unwrap().is_zero());
        assert!(s.render(&p("s1^2*t1")).is_err());
        assert!(s.verify_render_ambiguity(&p("s1^2*s2^2*t1^2*t2^2")).unwrap());
    }

    #[test]
    fn split_examples() {
        let s = segre();
        let p = |t: &str| parse_poly(t, s.base()).unwrap();
        let (q, q2) = s.split_bihomogeneous(&p("s1^3*t1")).unwrap();
        assert_eq!((q.to_string(), q2.to_string()), ("s1^2*t1^2".into(), "0".into()));
        let (q, q2) = s.split_bihomogeneous(&p("s2^3*t2")).unwrap();
        assert_eq!((q.to_string(), q2.to_string()), ("0".into(), "s2^2*t1*t2".into()));
        assert!(s.split_bihomogeneous(&p("s1^2*t1^2")).is_err());
    }

    #[test]
    fn wrong_context_is_rejected() {
        let s = segre();
        let y = parse_poly("y1*y4", s.ambient()).unwrap();
        assert!(s.verify_render_ambiguity(&y).is_err());
    }
}
