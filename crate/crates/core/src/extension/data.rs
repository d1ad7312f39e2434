//! Parameters of the extended map: `alpha`, `beta` and the correction forms
//! `s1..s5`, `t1..t5` in `a, b, c, d`.

use std::fmt;

use num_traits::Zero;

use super::rings::{ExtensionRings, ABCD};
use crate::algebra::{parse_poly, GaussianRational, MultiPoly};
use crate::error::{Error, Result};

/// Degree in `a, b, c, d` required of `s_i` and `t_i`.
pub const CORRECTION_DEGREES: [u32; 5] = [1, 1, 1, 2, 2];

#[derive(Clone, PartialEq, Eq)]
pub struct ExtensionData {
    rings: ExtensionRings,
    alpha: MultiPoly,
    beta: MultiPoly,
    s: [MultiPoly; 5],
    t: [MultiPoly; 5],
}

fn check_form(rings: &ExtensionRings, name: &str, p: &MultiPoly, degree: u32) -> Result<MultiPoly> {
    let p = p.embed(&rings.r)?;
    let params: &[usize] = if rings.is_symbolic() { &[7, 8] } else { &[] };
    for (m, _) in p.terms() {
        let e = m.exponents();
        let stray = (0..e.len()).any(|i| e[i] > 0 && !ABCD.contains(&i) && !params.contains(&i));
        let deg: u32 = ABCD.iter().map(|&i| e[i] as u32).sum();
        if stray || deg != degree {
            return Err(Error::Contract(format!(
                "{name} = {p} must be a form of degree {degree} in a, b, c, d"
            )));
        }
    }
    Ok(p)
}

impl ExtensionData {
    /// General data with numeric `alpha`, `beta`; `s1 = s3 = t1 = t3 = 0`
    /// is the normalized form but any forms of the right degree are accepted.
    pub fn new(
        alpha: &GaussianRational,
        beta: &GaussianRational,
        s: [MultiPoly; 5],
        t: [MultiPoly; 5],
    ) -> Result<Self> {
        let rings = ExtensionRings::numeric();
        let alpha = MultiPoly::constant(&rings.r, alpha.clone());
        let beta = MultiPoly::constant(&rings.r, beta.clone());
        Self::assemble(rings, alpha, beta, s, t)
    }

    fn assemble(
        rings: ExtensionRings,
        alpha: MultiPoly,
        beta: MultiPoly,
        s: [MultiPoly; 5],
        t: [MultiPoly; 5],
    ) -> Result<Self> {
        let mut checked_s = Vec::with_capacity(5);
        let mut checked_t = Vec::with_capacity(5);
        for i in 0..5 {
            checked_s.push(check_form(&rings, &format!("s{}", i + 1), &s[i], CORRECTION_DEGREES[i])?);
            checked_t.push(check_form(&rings, &format!("t{}", i + 1), &t[i], CORRECTION_DEGREES[i])?);
        }
        Ok(Self {
            rings,
            alpha,
            beta,
            s: checked_s.try_into().unwrap(),
            t: checked_t.try_into().unwrap(),
        })
    }

    /// The unique corrections making both branch equations extend:
    /// `s2 = (1 - alpha beta) a`, `s4 = beta a^2 + alpha^2 d^2`,
    /// `s5 = alpha (alpha beta - 1) a d`, the mirrored `t2`, `t4`, `t5`, and
    /// `s1 = s3 = t1 = t3 = 0`.
    pub fn standard_solution(alpha: &GaussianRational, beta: &GaussianRational) -> Self {
        let rings = ExtensionRings::numeric();
        let al = MultiPoly::constant(&rings.r, alpha.clone());
        let be = MultiPoly::constant(&rings.r, beta.clone());
        Self::solution_in(rings, al, be)
    }

    /// The standard solution over the symbolic rings.
    pub fn symbolic_standard_solution() -> Self {
        let rings = ExtensionRings::symbolic();
        let al = ExtensionRings::var(&rings.r, "alpha");
        let be = ExtensionRings::var(&rings.r, "beta");
        Self::solution_in(rings, al, be)
    }

    /// The standard solution with `beta = alpha`; `None` keeps `alpha` symbolic.
    pub fn equivariant_solution(alpha: Option<&GaussianRational>) -> Self {
        match alpha {
            Some(a) => Self::standard_solution(a, a),
            None => {
                let rings = ExtensionRings::symbolic();
                let al = ExtensionRings::var(&rings.r, "alpha");
                Self::solution_in(rings, al.clone(), al)
            }
        }
    }

    fn solution_in(rings: ExtensionRings, al: MultiPoly, be: MultiPoly) -> Self {
        let r = rings.r.clone();
        let v = |n: &str| ExtensionRings::var(&r, n);
        let (a, d) = (v("a"), v("d"));
        let one = MultiPoly::one(&r);
        let k = &one - &(&al * &be);
        let zero = MultiPoly::zero(&r);
        let ad = &a * &d;
        let s2 = &k * &a;
        let s4 = &(&be * &(&a * &a)) + &(&(&al * &al) * &(&d * &d));
        let s5 = -&(&(&al * &k) * &ad);
        let t2 = &k * &d;
        let t4 = -&(&(&be * &k) * &ad);
        let t5 = &(&(&be * &be) * &(&a * &a)) + &(&al * &(&d * &d));
        Self {
            rings,
            alpha: al,
            beta: be,
            s: [zero.clone(), s2, zero.clone(), s4, s5],
            t: [zero.clone(), t2, zero, t4, t5],
        }
    }

    pub fn rings(&self) -> &ExtensionRings {
        &self.rings
    }

    pub fn is_symbolic(&self) -> bool {
        self.rings.is_symbolic()
    }

    /// `alpha` as a polynomial of `R` (a constant unless symbolic).
    pub fn alpha(&self) -> &MultiPoly {
        &self.alpha
    }

    pub fn beta(&self) -> &MultiPoly {
        &self.beta
    }

    /// Numeric `(alpha, beta)`, or `None` in symbolic mode.
    pub fn scalars(&self) -> Option<(GaussianRational, GaussianRational)> {
        if self.is_symbolic() {
            return None;
        }
        let get = |p: &MultiPoly| p.constant_value().unwrap_or_else(GaussianRational::zero);
        Some((get(&self.alpha), get(&self.beta)))
    }

    /// `s_i` for `i` in `1..=5`.
    pub fn s(&self, i: usize) -> &MultiPoly {
        &self.s[i - 1]
    }

    /// `t_i` for `i` in `1..=5`.
    pub fn t(&self, i: usize) -> &MultiPoly {
        &self.t[i - 1]
    }

    /// Replaces `s_i`, checking its degree.
    pub fn with_s(&self, i: usize, p: &MultiPoly) -> Result<Self> {
        let k = index(i)?;
        let mut out = self.clone();
        out.s[k] = check_form(&self.rings, &format!("s{i}"), p, CORRECTION_DEGREES[k])?;
        Ok(out)
    }

    /// Replaces `t_i`, checking its degree.
    pub fn with_t(&self, i: usize, p: &MultiPoly) -> Result<Self> {
        let k = index(i)?;
        let mut out = self.clone();
        out.t[k] = check_form(&self.rings, &format!("t{i}"), p, CORRECTION_DEGREES[k])?;
        Ok(out)
    }

    /// Parses a form in `a, b, c, d` over `R`.
    pub fn form(&self, text: &str) -> Result<MultiPoly> {
        parse_poly(text, &self.rings.r)
    }

    /// `f = y1 + alpha*y3` in `R`.
    pub fn f(&self) -> MultiPoly {
        let v = |n: &str| ExtensionRings::var(&self.rings.r, n);
        &v("y1") + &(&self.alpha * &v("y3"))
    }

    /// `g = beta*y1 + y3` in `R`.
    pub fn g(&self) -> MultiPoly {
        let v = |n: &str| ExtensionRings::var(&self.rings.r, n);
        &(&self.beta * &v("y1")) + &v("y3")
    }

    /// `1 - alpha*beta` in `R`.
    pub fn one_minus_ab(&self) -> MultiPoly {
        &MultiPoly::one(&self.rings.r) - &(&self.alpha * &self.beta)
    }

    /// True when the corrections equal the standard values for these scalars.
    pub fn is_standard_solution(&self) -> bool {
        let sol = Self::solution_in(self.rings.clone(), self.alpha.clone(), self.beta.clone());
        sol.s == self.s && sol.t == self.t
    }
}

fn index(i: usize) -> Result<usize> {
    if (1..=5).contains(&i) {
        Ok(i - 1)
    } else {
        Err(Error::Contract(format!("correction index {i} outside 1..=5")))
    }
}

impl fmt::Debug for ExtensionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "alpha = {}, beta = {}", self.alpha, self.beta)?;
        for i in 0..5 {
            writeln!(f, "s{} = {}, t{} = {}", i + 1, self.s[i], i + 1, self.t[i])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn solution_at_origin() {
        let d = ExtensionData::standard_solution(&q("0"), &q("0"));
        assert_eq!(d.s(2).to_string(), "a");
        assert!(d.s(4).is_zero() && d.s(5).is_zero());
        assert_eq!(d.t(2).to_string(), "d");
        assert!(d.t(4).is_zero() && d.t(5).is_zero());
    }

    #[test]
    fn solution_at_two_three() {
        let d = ExtensionData::standard_solution(&q("2"), &q("3"));
        assert_eq!(d.s(4).to_string(), "3*a^2 + 4*d^2");
        assert_eq!(d.s(2).to_string(), "-5*a");
        assert_eq!(d.s(5).to_string(), "10*a*d");
        assert_eq!(d.t(5).to_string(), "9*a^2 + 2*d^2");
        assert!(d.is_standard_solution());
    }

    #[test]
    fn unit_product_kills_linear_terms() {
        let d = ExtensionData::standard_solution(&q("2"), &q("1/2"));
        for p in [d.s(2), d.t(2), d.s(5), d.t(4)] {
            assert!(p.is_zero());
        }
    }

    #[test]
    fn degree_checks() {
        let d = ExtensionData::standard_solution(&q("1"), &q("2"));
        assert!(d.with_s(2, &d.form("a + b").unwrap()).is_ok());
        assert!(matches!(d.with_s(2, &d.form("a^2").unwrap()), Err(Error::Contract(_))));
        assert!(d.with_t(4, &d.form("y1").unwrap()).is_err());
        assert!(d.with_t(6, &d.form("a").unwrap()).is_err());
        let perturbed = d.with_s(4, &(d.s(4) + &d.form("b*c").unwrap())).unwrap();
        assert!(!perturbed.is_standard_solution());
    }

    #[test]
    fn symbolic_solution() {
        let d = ExtensionData::symbolic_standard_solution();
        assert_eq!(d.s(2).to_string(), "-a*alpha*beta + a");
        assert!(d.scalars().is_none());
    }
}
