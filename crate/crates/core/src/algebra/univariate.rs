//! Dense univariate polynomials over Q(i).

use std::fmt;

use num_traits::{One, Zero};

use super::gaussian::GaussianRational;
use super::poly::MultiPoly;
use crate::error::{Error, Result};

/// Coefficients from the constant term upward, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// `x^n - r`.
    pub fn binomial(n: usize, r: &GaussianRational) -> Self {
        let mut c = vec![GaussianRational::zero(); n + 1];
        c[0] = -r;
        c[n] += &GaussianRational::one();
        Self::new(c)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.inv().unwrap();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::new(out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dl = d.leading().expect("division by the zero polynomial");
        let dinv = dl.inv().unwrap();
        let dd = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![GaussianRational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &dinv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    r[k + j] -= &t;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale_int(k as i64))
                .collect(),
        )
    }

    /// True when the polynomial has no repeated roots.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    pub fn evaluate(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Roots lying in Q(i), found from linear and quadratic factors of the
    /// input. Higher-degree irreducible factors are not searched.
    pub fn roots_of_low_degree(&self) -> Vec<GaussianRational> {
        match self.degree() {
            Some(1) => vec![-(&self.coeffs[0] / &self.coeffs[1])],
            Some(2) => {
                let (c, b, a) = (&self.coeffs[0], &self.coeffs[1], &self.coeffs[2]);
                let disc = &(b * b) - &(&(a * c) * &GaussianRational::from_integer(4));
                match disc.sqrt() {
                    None => Vec::new(),
                    Some(s) => {
                        let two_a = a.scale_int(2);
                        let r1 = &(&-b + &s) / &two_a;
                        let r2 = &(&-b - &s) / &two_a;
                        if r1 == r2 {
                            vec![r1]
                        } else {
                            vec![r1, r2]
                        }
                    }
                }
            }
            _ => Vec::new(),
        }
    }

    /// Reads a polynomial in one variable of a multivariate context,
    /// failing if any other variable occurs.
    pub fn from_multi(p: &MultiPoly, var: usize) -> Result<Self> {
        let mut coeffs = vec![GaussianRational::zero(); p.degree_in(var) as usize + 1];
        for (m, c) in p.terms() {
            if m.exponents()
                .iter()
                .enumerate()
                .any(|(i, &e)| i != var && e > 0)
            {
                return Err(Error::Contract(format!(
                    "polynomial {p} involves variables other than `{}`",
                    p.ctx().name(var)
                )));
            }
            coeffs[m.exponents()[var] as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    /// Dehomogenizes a binary form in variables `(x, z)` at `z = 1`.
    /// Returns the affine polynomial and the multiplicity of the root at
    /// infinity (`z = 0`).
    pub fn from_binary_form(p: &MultiPoly, x: usize, z: usize) -> Result<(Self, usize)> {
        if p.is_zero() {
            return Ok((Self::zero(), 0));
        }
        let total = p.total_degree().unwrap() as usize;
        let mut coeffs = vec![GaussianRational::zero(); total + 1];
        for (m, c) in p.terms() {
            let e = m.exponents();
            if e.iter().enumerate().any(|(i, &k)| i != x && i != z && k > 0)
                || (e[x] + e[z]) as usize != total
            {
                return Err(Error::Contract(format!("{p} is not a binary form")));
            }
            coeffs[e[x] as usize] = c.clone();
        }
        let affine = Self::new(coeffs);
        let at_infinity = total - affine.degree().unwrap_or(0);
        Ok((affine, at_infinity))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{k}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    fn up(cs: &[&str]) -> UniPoly {
        UniPoly::new(cs.iter().map(|s| q(s)).collect())
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x - 1)(x + 2) and (x - 1)(x - 3)
        let a = up(&["-2", "1", "1"]);
        let b = up(&["3", "-4", "1"]);
        assert_eq!(a.gcd(&b), up(&["-1", "1"]));
    }

    #[test]
    fn division_identity() {
        let a = up(&["1", "0", "-3", "2", "i"]);
        let d = up(&["1/2", "1+i"]);
        let (qq, r) = a.div_rem(&d);
        assert_eq!(qq.mul(&d).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn squarefree() {
        assert!(up(&["-1", "0", "0", "0", "1"]).is_squarefree());
        assert!(!up(&["1", "2", "1"]).is_squarefree());
    }

    #[test]
    fn quadratic_roots_in_gaussian_field() {
        let roots = up(&["1", "0", "1"]).roots_of_low_degree();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&q("i")) && roots.contains(&q("-i")));
        assert!(up(&["-2", "0", "1"]).roots_of_low_degree().is_empty());
    }

    #[test]
    fn common_root_of_binomials() {
        // x^2 = -1 and x^4 = 1 share the roots ±i
        let g = UniPoly::binomial(2, &q("-1")).gcd(&UniPoly::binomial(4, &q("1")));
        assert_eq!(g.degree(), Some(2));
        // x^2 = 1 and x^3 = -1 share only x = -1
        let g = UniPoly::binomial(2, &q("1")).gcd(&UniPoly::binomial(3, &q("-1")));
        assert_eq!(g.roots_of_low_degree(), vec![q("-1")]);
    }
}
