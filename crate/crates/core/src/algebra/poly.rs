//! Sparse multivariate polynomials over Q(i).
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors. The derived order on
//! exponent vectors is lexicographic with the first declared variable most
//! significant; canonical output walks it from the largest monomial down.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use smallvec::SmallVec;

use super::context::{same_context, Ctx};
use super::gaussian::GaussianRational;
use crate::error::{Error, Result};

pub type Exponents = SmallVec<[u16; 14]>;

/// Exponent vector, one entry per variable of the owning context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[idx] = 1;
        m
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Exponents::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            out.push(a.checked_sub(*b)?);
        }
        Some(Monomial(out))
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> i64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w as i64)
            .sum()
    }

    pub fn bidegree(&self, bidegrees: &[(i32, i32)]) -> (i64, i64) {
        self.0.iter().zip(bidegrees).fold((0, 0), |(x, y), (&e, &(p, q))| {
            (x + e as i64 * p as i64, y + e as i64 * q as i64)
        })
    }

    /// Render as `x^2*y` against the names of a context.
    pub fn render(&self, ctx: &Ctx) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    ctx.name(i).to_string()
                } else {
                    format!("{}^{}", ctx.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Result of a (weighted or bi-) homogeneity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Homogeneity<D> {
    /// The zero polynomial: homogeneous of every degree.
    Zero,
    Homogeneous(D),
    /// Two monomials of different degree.
    Inhomogeneous(Monomial, Monomial),
}

impl<D: Copy> Homogeneity<D> {
    pub fn degree(&self) -> Option<D> {
        match self {
            Homogeneity::Homogeneous(d) => Some(*d),
            _ => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        !matches!(self, Homogeneity::Inhomogeneous(..))
    }
}

/// Sparse polynomial with exact coefficients over a shared variable context.
#[derive(Clone)]
pub struct MultiPoly {
    ctx: Ctx,
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl MultiPoly {
    pub fn zero(ctx: &Ctx) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::constant(ctx, GaussianRational::one())
    }

    pub fn constant(ctx: &Ctx, c: GaussianRational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(ctx.len()), c);
        }
        p
    }

    pub fn int(ctx: &Ctx, n: i64) -> Self {
        Self::constant(ctx, GaussianRational::from_integer(n))
    }

    pub fn var(ctx: &Ctx, name: &str) -> Result<Self> {
        let idx = ctx.index_of(name)?;
        Ok(Self::var_at(ctx, idx))
    }

    pub fn var_at(ctx: &Ctx, idx: usize) -> Self {
        Self::monomial(ctx, Monomial::var(ctx.len(), idx), GaussianRational::one())
    }

    pub fn monomial(ctx: &Ctx, m: Monomial, c: GaussianRational) -> Self {
        assert_eq!(m.0.len(), ctx.len(), "monomial length differs from context");
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, dropping zeros.
    pub fn from_terms<I>(ctx: &Ctx, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, GaussianRational)>,
    {
        let mut acc: BTreeMap<Monomial, GaussianRational> = BTreeMap::new();
        for (m, c) in terms {
            assert_eq!(m.0.len(), ctx.len(), "monomial length differs from context");
            add_term(&mut acc, m, &c);
        }
        Self {
            ctx: ctx.clone(),
            terms: acc,
        }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> GaussianRational {
        self.terms.get(m).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn constant_value(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.constant_value().is_some()
    }

    pub fn leading(&self) -> Option<(&Monomial, &GaussianRational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::total_degree).max()
    }

    pub fn degree_in(&self, idx: usize) -> u16 {
        self.terms.keys().map(|m| m.0[idx]).max().unwrap_or(0)
    }

    /// True when the variable occurs in some term.
    pub fn involves(&self, idx: usize) -> bool {
        self.terms.keys().any(|m| m.0[idx] > 0)
    }

    fn check_ctx(&self, other: &MultiPoly, op: &str) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "{op}: [{}] vs [{}]",
                self.ctx.names().join(","),
                other.ctx.names().join(",")
            )))
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other, "add")?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c);
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other, "sub")?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), &-c);
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms,
        })
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ctx(other, "mul")?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ctx));
        }
        if let Some(c) = other.constant_value() {
            return Ok(self.scale(&c));
        }
        if let Some(c) = self.constant_value() {
            return Ok(other.scale(&c));
        }
        let mut acc: HashMap<Monomial, GaussianRational> =
            HashMap::with_capacity(self.len() * other.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                acc.entry(m1.mul(m2))
                    .and_modify(|e| *e += &c)
                    .or_insert(c);
            }
        }
        Ok(Self {
            ctx: self.ctx.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    /// In-place `self += c * other`.
    pub fn add_scaled(&mut self, other: &MultiPoly, c: &GaussianRational) {
        assert!(
            same_context(&self.ctx, &other.ctx),
            "add_scaled: context mismatch"
        );
        if c.is_zero() {
            return;
        }
        for (m, a) in &other.terms {
            add_term(&mut self.terms, m.clone(), &(a * c));
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn scale_int(&self, k: i64) -> MultiPoly {
        self.scale(&GaussianRational::from_integer(k))
    }

    /// Multiplies by a monomial with unit coefficient.
    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Weighted homogeneity; requires a graded context.
    pub fn homogeneity(&self) -> Result<Homogeneity<i64>> {
        let weights = self
            .ctx
            .weights()
            .ok_or_else(|| Error::Contract("context carries no weights".into()))?;
        Ok(classify(&self.terms, |m| m.weighted_degree(weights)))
    }

    /// Bihomogeneity; requires bidegrees on the context.
    pub fn bihomogeneity(&self) -> Result<Homogeneity<(i64, i64)>> {
        let bideg = self
            .ctx
            .bidegrees()
            .ok_or_else(|| Error::Contract("context carries no bidegrees".into()))?;
        Ok(classify(&self.terms, |m| m.bidegree(bideg)))
    }

    /// Homogeneity with respect to total degree, regardless of weights.
    pub fn standard_homogeneity(&self) -> Homogeneity<i64> {
        classify(&self.terms, |m| m.total_degree() as i64)
    }

    /// Evaluates at a point given in context order.
    pub fn evaluate(&self, point: &[GaussianRational]) -> Result<GaussianRational> {
        if point.len() != self.ctx.len() {
            return Err(Error::Contract(format!(
                "point has {} coordinates, context has {}",
                point.len(),
                self.ctx.len()
            )));
        }
        let mut cache: HashMap<(usize, u16), GaussianRational> = HashMap::new();
        let mut total = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    let p = cache
                        .entry((i, e))
                        .or_insert_with(|| point[i].pow(e as u32));
                    v *= &*p;
                }
            }
            total += &v;
        }
        Ok(total)
    }

    /// Re-expresses the polynomial over another context by matching names.
    pub fn embed(&self, target: &Ctx) -> Result<MultiPoly> {
        if same_context(&self.ctx, target) {
            return Ok(Self {
                ctx: target.clone(),
                terms: self.terms.clone(),
            });
        }
        let mut map = Vec::with_capacity(self.ctx.len());
        for (i, name) in self.ctx.names().iter().enumerate() {
            match target.index_of(name) {
                Ok(j) => map.push(Some(j)),
                Err(e) => {
                    if self.involves(i) {
                        return Err(e);
                    }
                    map.push(None);
                }
            }
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut out = Monomial::one(target.len());
            for (i, &e) in m.0.iter().enumerate() {
                if let Some(j) = map[i] {
                    out.0[j] += e;
                }
            }
            (out, c.clone())
        });
        Ok(Self::from_terms(target, terms))
    }

    /// Sets one variable to a constant, staying in the same context.
    pub fn specialize(&self, idx: usize, value: &GaussianRational) -> MultiPoly {
        let mut cache: HashMap<u16, GaussianRational> = HashMap::new();
        let terms = self.terms.iter().map(|(m, c)| {
            let e = m.0[idx];
            let mut m2 = m.clone();
            m2.0[idx] = 0;
            let f = cache.entry(e).or_insert_with(|| value.pow(e as u32));
            (m2, c * &*f)
        });
        Self::from_terms(&self.ctx, terms)
    }

    /// Coefficients with respect to one variable: entry `k` multiplies `x^k`.
    pub fn coefficients_in(&self, idx: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(idx) as usize;
        let mut out: Vec<BTreeMap<Monomial, GaussianRational>> = vec![BTreeMap::new(); deg + 1];
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2.0[idx] as usize;
            m2.0[idx] = 0;
            out[e].insert(m2, c.clone());
        }
        out.into_iter()
            .map(|terms| Self {
                ctx: self.ctx.clone(),
                terms,
            })
            .collect()
    }

    /// Keeps only the terms satisfying a predicate.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> MultiPoly {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a function to every coefficient.
    pub fn map_coefficients<F: Fn(&GaussianRational) -> GaussianRational>(&self, f: F) -> MultiPoly {
        Self::from_terms(&self.ctx, self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    pub fn raw_terms(&self) -> &BTreeMap<Monomial, GaussianRational> {
        &self.terms
    }

    /// Canonical text, e.g. `y1^2 - 2*y1*y2 + (1/2+i)*z1`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

/// All monomials in the variables `vars` whose weighted degree is `degree`,
/// using the context weights (or unit weights for an ungraded context).
pub fn monomials_of_degree(ctx: &Ctx, vars: &[usize], degree: u32) -> Vec<Monomial> {
    fn go(
        ctx: &Ctx,
        vars: &[usize],
        left: u32,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        let Some((&v, rest)) = vars.split_first() else {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        };
        let w = ctx.weight(v).unwrap_or(1);
        for e in (0..=left / w).rev() {
            cur.0[v] = e as u16;
            go(ctx, rest, left - e * w, cur, out);
        }
        cur.0[v] = 0;
    }
    let mut out = Vec::new();
    go(ctx, vars, degree, &mut Monomial::one(ctx.len()), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All monomials in the variables `vars` of the given bidegree. Each listed
/// variable must have a nonzero bidegree with non-negative entries.
pub fn monomials_of_bidegree(ctx: &Ctx, vars: &[usize], bidegree: (i64, i64)) -> Vec<Monomial> {
    fn go(
        bideg: &[(i32, i32)],
        vars: &[usize],
        left: (i64, i64),
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        let Some((&v, rest)) = vars.split_first() else {
            if left == (0, 0) {
                out.push(cur.clone());
            }
            return;
        };
        let (a, b) = (bideg[v].0 as i64, bideg[v].1 as i64);
        let mut e = 0i64;
        while left.0 - e * a >= 0 && left.1 - e * b >= 0 {
            cur.0[v] = e as u16;
            go(bideg, rest, (left.0 - e * a, left.1 - e * b), cur, out);
            e += 1;
        }
        cur.0[v] = 0;
    }
    let bideg = ctx.bidegrees().expect("context without bidegrees");
    assert!(
        vars.iter().all(|&v| bideg[v].0 >= 0 && bideg[v].1 >= 0 && bideg[v] != (0, 0)),
        "bidegrees must be non-negative and nonzero"
    );
    let mut out = Vec::new();
    go(bideg, vars, bidegree, &mut Monomial::one(ctx.len()), &mut out);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn add_term(acc: &mut BTreeMap<Monomial, GaussianRational>, m: Monomial, c: &GaussianRational) {
    if c.is_zero() {
        return;
    }
    match acc.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c.clone());
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn classify<D: PartialEq + Copy, F: Fn(&Monomial) -> D>(
    terms: &BTreeMap<Monomial, GaussianRational>,
    deg: F,
) -> Homogeneity<D> {
    let mut iter = terms.keys().rev();
    let Some(first) = iter.next() else {
        return Homogeneity::Zero;
    };
    let d = deg(first);
    for m in iter {
        if deg(m) != d {
            return Homogeneity::Inhomogeneous(first.clone(), m.clone());
        }
    }
    Homogeneity::Homogeneous(d)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let multi = self.terms.len() > 1;
        for (k, (m, c)) in self.terms().enumerate() {
            let (negative, body) = render_term(m, c, &self.ctx, multi);
            match (k, negative) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

/// Returns (leading minus?, body without that minus).
fn render_term(m: &Monomial, c: &GaussianRational, ctx: &Ctx, multi: bool) -> (bool, String) {
    if !c.is_simple() {
        let text = format!("({c})");
        return if m.is_one() {
            (false, if multi { text } else { c.to_string() })
        } else {
            (false, format!("{text}*{}", m.render(ctx)))
        };
    }
    let negative = c.is_negative_display();
    let abs = if negative { -c } else { c.clone() };
    let body = if m.is_one() {
        abs.to_string()
    } else if abs.is_one() {
        m.render(ctx)
    } else {
        format!("{abs}*{}", m.render(ctx))
    };
    (negative, body)
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly({self})")
    }
}

// Operator impls panic on a context mismatch; the `checked_*` methods
// report it as an error instead.
macro_rules! poly_binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl<'a> $tr<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$f(rhs)
            }
        }
        impl<'a> $tr<MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            fn $f(self, rhs: MultiPoly) -> MultiPoly {
                self.$f(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl AddAssign<&MultiPoly> for MultiPoly {
    fn add_assign(&mut self, rhs: &MultiPoly) {
        assert!(same_context(&self.ctx, &rhs.ctx), "add: context mismatch");
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, m.clone(), c);
        }
    }
}

impl SubAssign<&MultiPoly> for MultiPoly {
    fn sub_assign(&mut self, rhs: &MultiPoly) {
        assert!(same_context(&self.ctx, &rhs.ctx), "sub: context mismatch");
        for (m, c) in &rhs.terms {
            add_term(&mut self.terms, m.clone(), &-c);
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Mul<i64> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, k: i64) -> MultiPoly {
        self.scale_int(k)
    }
}

impl Mul<i64> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, k: i64) -> MultiPoly {
        self.scale_int(k)
    }
}

impl Mul<&GaussianRational> for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, c: &GaussianRational) -> MultiPoly {
        self.scale(c)
    }
}

impl Mul<&GaussianRational> for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, c: &GaussianRational) -> MultiPoly {
        self.scale(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::context::VariableContext;

    fn ctx() -> Ctx {
        VariableContext::graded(&[("s1", 1), ("s2", 1), ("u", 2)]).unwrap()
    }

    #[test]
    fn binomial_square() {
        let c = ctx();
        let s1 = MultiPoly::var(&c, "s1").unwrap();
        let s2 = MultiPoly::var(&c, "s2").unwrap();
        let sq = (&s1 + &s2).pow(2);
        assert_eq!(sq.to_string(), "s1^2 + 2*s1*s2 + s2^2");
        assert_eq!(sq, &(&s1 * &s1) + &(&(&s1 * &s2) * 2) + (&s2 * &s2));
    }

    #[test]
    fn annihilator() {
        let c = ctx();
        let p = MultiPoly::var(&c, "u").unwrap() + MultiPoly::int(&c, 3);
        assert!((&p * &MultiPoly::zero(&c)).is_zero());
    }

    #[test]
    fn gaussian_constant_product() {
        let c = ctx();
        let a = MultiPoly::constant(&c, "1+i".parse().unwrap());
        let b = MultiPoly::constant(&c, "1-i".parse().unwrap());
        assert_eq!(&a * &b, MultiPoly::int(&c, 2));
    }

    #[test]
    fn context_mismatch_is_reported() {
        let a = MultiPoly::var(&ctx(), "s1").unwrap();
        let other = VariableContext::ungraded(&["x"]).unwrap();
        let b = MultiPoly::var(&other, "x").unwrap();
        assert!(matches!(a.checked_add(&b), Err(Error::ContextMismatch(_))));
        assert!(matches!(a.checked_mul(&b), Err(Error::ContextMismatch(_))));
    }

    #[test]
    fn canonical_text_with_complex_and_negative() {
        let c = ctx();
        let s1 = MultiPoly::var(&c, "s1").unwrap();
        let u = MultiPoly::var(&c, "u").unwrap();
        let q = |t: &str| -> GaussianRational { t.parse().unwrap() };
        let p = &(&s1 * &s1) * &q("-3/2") + &u * &q("1/2+i") + MultiPoly::constant(&c, q("-i"));
        assert_eq!(p.to_string(), "-3/2*s1^2 + (1/2+i)*u - i");
    }

    #[test]
    fn homogeneity_reports() {
        let c = ctx();
        let s1 = MultiPoly::var(&c, "s1").unwrap();
        let u = MultiPoly::var(&c, "u").unwrap();
        assert_eq!((&s1 * &s1 + &u).homogeneity().unwrap(), Homogeneity::Homogeneous(2));
        assert_eq!(MultiPoly::zero(&c).homogeneity().unwrap(), Homogeneity::Zero);
        assert!(!(&s1 + &u).homogeneity().unwrap().is_homogeneous());
    }

    #[test]
    fn monomial_enumeration() {
        let c = ctx();
        // weight 4 in s1, s2 (weight 1) and u (weight 2)
        let ms = monomials_of_degree(&c, &[0, 1, 2], 4);
        assert_eq!(ms.len(), 9);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
        assert_eq!(monomials_of_degree(&c, &[0, 1], 0).len(), 1);
    }

    #[test]
    fn embed_by_name() {
        let c = ctx();
        let big = VariableContext::ungraded(&["u", "v", "s1", "s2"]).unwrap();
        let p = MultiPoly::var(&c, "s1").unwrap() * MultiPoly::var(&c, "u").unwrap();
        let q = p.embed(&big).unwrap();
        assert_eq!(q.to_string(), "u*s1");
        let small = VariableContext::ungraded(&["s1"]).unwrap();
        assert!(p.embed(&small).is_err());
    }
}
