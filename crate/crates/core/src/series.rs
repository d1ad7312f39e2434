//! Truncated power series in `t` with coefficients in Z[e]/(e^2 - 1).
//!
//! The coefficient `inv + anti*e` of `t^n` records the dimensions of the
//! invariant and anti-invariant parts of a graded piece.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `inv + anti*e` with `e^2 = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct EpsInt {
    pub inv: i64,
    pub anti: i64,
}

impl EpsInt {
    pub const ZERO: EpsInt = EpsInt { inv: 0, anti: 0 };
    pub const ONE: EpsInt = EpsInt { inv: 1, anti: 0 };
    pub const E: EpsInt = EpsInt { inv: 0, anti: 1 };

    pub fn new(inv: i64, anti: i64) -> Self {
        Self { inv, anti }
    }

    pub fn is_zero(self) -> bool {
        self.inv == 0 && self.anti == 0
    }

    /// Units of Z[e]/(e^2 - 1) are exactly ±1 and ±e; returns the inverse.
    pub fn unit_inverse(self) -> Option<EpsInt> {
        match (self.inv, self.anti) {
            (1, 0) | (-1, 0) | (0, 1) | (0, -1) => Some(self),
            _ => None,
        }
    }
}

impl Add for EpsInt {
    type Output = EpsInt;
    fn add(self, o: EpsInt) -> EpsInt {
        EpsInt::new(self.inv + o.inv, self.anti + o.anti)
    }
}

impl Sub for EpsInt {
    type Output = EpsInt;
    fn sub(self, o: EpsInt) -> EpsInt {
        EpsInt::new(self.inv - o.inv, self.anti - o.anti)
    }
}

impl Neg for EpsInt {
    type Output = EpsInt;
    fn neg(self) -> EpsInt {
        EpsInt::new(-self.inv, -self.anti)
    }
}

impl Mul for EpsInt {
    type Output = EpsInt;
    fn mul(self, o: EpsInt) -> EpsInt {
        EpsInt::new(
            self.inv * o.inv + self.anti * o.anti,
            self.inv * o.anti + self.anti * o.inv,
        )
    }
}

/// Renders as `7e+8`, `e-1`, `-2e-2`, `-1`, `e`.
impl fmt::Display for EpsInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e_part = match self.anti {
            0 => String::new(),
            1 => "e".to_string(),
            -1 => "-e".to_string(),
            k => format!("{k}e"),
        };
        match (self.anti, self.inv) {
            (0, c) => write!(f, "{c}"),
            (_, 0) => write!(f, "{e_part}"),
            (_, c) if c > 0 => write!(f, "{e_part}+{c}"),
            (_, c) => write!(f, "{e_part}{c}"),
        }
    }
}

/// Eigencharacter of a generator: `+1` or `e`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Eigen {
    Plus,
    Minus,
}

impl Eigen {
    fn as_eps(self) -> EpsInt {
        match self {
            Eigen::Plus => EpsInt::ONE,
            Eigen::Minus => EpsInt::E,
        }
    }
}

/// A product of factors `(1 - eps t^w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenominatorSpec {
    factors: Vec<(u32, Eigen)>,
}

impl DenominatorSpec {
    pub fn new(factors: Vec<(u32, Eigen)>) -> Result<Self> {
        if factors.iter().any(|(w, _)| *w == 0) {
            return Err(Error::Contract("denominator factor of weight 0".into()));
        }
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[(u32, Eigen)] {
        &self.factors
    }

    pub fn with_factor(&self, w: u32, eigen: Eigen) -> Result<Self> {
        let mut f = self.factors.clone();
        f.push((w, eigen));
        Self::new(f)
    }

    /// `(1-et)(1-t^2)(1-et^2)^2(1-t^3)^2(1-et^3)^2`: one generator for each
    /// graded piece of the covering ring up to degree 3.
    pub fn godeaux_cover() -> Self {
        use Eigen::*;
        Self {
            factors: vec![
                (1, Minus),
                (2, Plus),
                (2, Minus),
                (2, Minus),
                (3, Plus),
                (3, Plus),
                (3, Minus),
                (3, Minus),
            ],
        }
    }
}

impl fmt::Display for DenominatorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, e) in &self.factors {
            let eps = if *e == Eigen::Minus { "e" } else { "" };
            if *w == 1 {
                write!(f, "(1-{eps}t)")?;
            } else {
                write!(f, "(1-{eps}t^{w})")?;
            }
        }
        Ok(())
    }
}

/// Power series truncated after `t^N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BigradedSeries {
    coeffs: Vec<EpsInt>,
}

impl BigradedSeries {
    /// Series from explicit coefficients; the truncation degree is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<EpsInt>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Contract("a series needs at least one coefficient".into()));
        }
        Ok(Self { coeffs })
    }

    pub fn one(truncation: usize) -> Self {
        let mut coeffs = vec![EpsInt::ZERO; truncation + 1];
        coeffs[0] = EpsInt::ONE;
        Self { coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> EpsInt {
        self.coeffs.get(n).copied().unwrap_or(EpsInt::ZERO)
    }

    pub fn coeffs(&self) -> &[EpsInt] {
        &self.coeffs
    }

    /// Multiplies by `(1 - eps t^w)`.
    pub fn mul_factor(&self, w: u32, eigen: Eigen) -> Self {
        let w = w as usize;
        let eps = eigen.as_eps();
        let mut out = self.coeffs.clone();
        for n in w..out.len() {
            out[n] = out[n] - eps * self.coeffs[n - w];
        }
        Self { coeffs: out }
    }

    /// Exact division by `(1 - eps t^w)`: `c_n = a_n + eps c_{n-w}`.
    pub fn divide_by_factor(&self, w: u32, eigen: Eigen) -> Result<Self> {
        if w == 0 {
            // 1 - eps is 0 or 1 - e, neither a unit
            return Err(Error::Contract(
                "factor with zero constant-term unit part: weight must be positive".into(),
            ));
        }
        let w = w as usize;
        let eps = eigen.as_eps();
        let mut out = self.coeffs.clone();
        for n in w..out.len() {
            out[n] = out[n] + eps * out[n - w];
        }
        Ok(Self { coeffs: out })
    }

    /// Product truncated at the smaller truncation degree.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let mut out = vec![EpsInt::ZERO; n + 1];
        for i in 0..=n {
            for j in 0..=n - i {
                out[i + j] = out[i + j] + self.coeffs[i] * other.coeffs[j];
            }
        }
        Self { coeffs: out }
    }

    /// Power-series division; the divisor's constant term must be a unit.
    pub fn divide(&self, by: &Self) -> Result<Self> {
        let inv0 = by.coeffs[0].unit_inverse().ok_or_else(|| {
            Error::Contract(format!(
                "divisor constant term {} is not a unit",
                by.coeffs[0]
            ))
        })?;
        let n = self.truncation().min(by.truncation());
        let mut out = vec![EpsInt::ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for j in 1..=k {
                acc = acc - by.coeffs[j] * out[k - j];
            }
            out[k] = inv0 * acc;
        }
        Ok(Self { coeffs: out })
    }

    /// Multiplies by every factor of the denominator.
    pub fn numerator_of(&self, denom: &DenominatorSpec) -> Self {
        denom
            .factors
            .iter()
            .fold(self.clone(), |acc, &(w, e)| acc.mul_factor(w, e))
    }

    /// Divides by every factor of the denominator.
    pub fn divide_by(&self, denom: &DenominatorSpec) -> Result<Self> {
        denom
            .factors
            .iter()
            .try_fold(self.clone(), |acc, &(w, e)| acc.divide_by_factor(w, e))
    }

    /// Coefficients as `[invariant, anti-invariant]` pairs.
    pub fn to_pairs(&self) -> Vec<[i64; 2]> {
        self.coeffs.iter().map(|c| [c.inv, c.anti]).collect()
    }
}

/// Renders as `1 + e t + (2+2e) t^2 + …`, skipping zero coefficients.
impl fmt::Display for BigradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.inv != 0 && c.anti != 0 {
                format!("({}{:+}e)", c.inv, c.anti)
            } else if c.anti != 0 {
                match c.anti {
                    1 => "e".to_string(),
                    -1 => "-e".to_string(),
                    k => format!("{k}e"),
                }
            } else {
                c.inv.to_string()
            };
            let coeff = coeff.replace("+1e", "+e").replace("-1e", "-e");
            let body = match n {
                0 => coeff,
                _ => {
                    let var = if n == 1 { "t".to_string() } else { format!("t^{n}") };
                    match coeff.as_str() {
                        "1" => var,
                        "-1" => format!("-{var}"),
                        _ => format!("{coeff} {var}"),
                    }
                }
            };
            if first {
                write!(f, "{body}")?;
                first = false;
            } else if let Some(rest) = body.strip_prefix('-') {
                write!(f, " - {rest}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.coeffs.len())
    }
}

/// `(h0(nK), h0(nK + σ))` for the étale double cover of a Godeaux surface
/// with torsion Z/2, from Riemann–Roch with χ = 1 and K² = 1.
pub fn godeaux_h0(n: usize) -> EpsInt {
    match n {
        0 => EpsInt::new(1, 0),
        1 => EpsInt::new(0, 1),
        _ => {
            let v = 1 + (n * (n - 1) / 2) as i64;
            EpsInt::new(v, v)
        }
    }
}

/// The bigraded Hilbert series of the covering ring, truncated after `t^N`.
pub fn godeaux_cover_series(truncation: usize) -> BigradedSeries {
    BigradedSeries {
        coeffs: (0..=truncation).map(godeaux_h0).collect(),
    }
}

pub const DEFAULT_TRUNCATION: usize = 12;

/// One line of the generator/relation reading of a numerator coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NumeratorReading {
    pub degree: usize,
    pub coefficient: EpsInt,
    /// Positive entries indicate generators missing from the denominator;
    /// negative entries indicate relations.
    pub invariant: i64,
    pub anti_invariant: i64,
}

/// Nonzero numerator coefficients in positive degree.
pub fn read_numerator(numerator: &BigradedSeries, up_to: usize) -> Vec<NumeratorReading> {
    (1..=up_to.min(numerator.truncation()))
        .filter(|&n| !numerator.coeff(n).is_zero())
        .map(|n| {
            let c = numerator.coeff(n);
            NumeratorReading {
                degree: n,
                coefficient: c,
                invariant: c.inv,
                anti_invariant: c.anti,
            }
        })
        .collect()
}

/// Full analysis of the covering series: the series itself, its numerator
/// over the degree ≤ 3 generators, and the numerator after adding the
/// extra anti-invariant generator of degree 4.
#[derive(Debug, Clone)]
pub struct GodeauxAnalysis {
    pub series: BigradedSeries,
    pub denominator: DenominatorSpec,
    pub numerator: BigradedSeries,
    pub extended_denominator: DenominatorSpec,
    pub extended_numerator: BigradedSeries,
}

impl GodeauxAnalysis {
    pub fn run(truncation: usize) -> Result<Self> {
        if truncation < 4 {
            return Err(Error::Contract(format!(
                "truncation {truncation} too small: the degree 4 term is needed"
            )));
        }
        let series = godeaux_cover_series(truncation);
        let denominator = DenominatorSpec::godeaux_cover();
        let numerator = series.numerator_of(&denominator);
        let extended_denominator = denominator.with_factor(4, Eigen::Minus)?;
        let extended_numerator = numerator.mul_factor(4, Eigen::Minus);
        Ok(Self {
            series,
            denominator,
            numerator,
            extended_denominator,
            extended_numerator,
        })
    }

    /// The lowest-degree nonconstant numerator term, whose positive
    /// anti-invariant part forces the extra generator.
    pub fn first_numerator_term(&self) -> Option<(usize, EpsInt)> {
        (1..=self.numerator.truncation())
            .map(|n| (n, self.numerator.coeff(n)))
            .find(|(_, c)| !c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(inv: i64, anti: i64) -> EpsInt {
        EpsInt::new(inv, anti)
    }

    #[test]
    fn series_through_degree_three() {
        let s = godeaux_cover_series(3);
        assert_eq!(s.coeffs(), &[e(1, 0), e(0, 1), e(2, 2), e(4, 4)]);
        assert_eq!(s.to_string(), "1 + e t + (2+2e) t^2 + (4+4e) t^3 + O(t^4)");
        assert_eq!(godeaux_cover_series(4).coeff(4), e(7, 7));
    }

    #[test]
    fn numerators_through_degree_eight() {
        let a = GodeauxAnalysis::run(DEFAULT_TRUNCATION).unwrap();
        let num: Vec<_> = (0..=8).map(|n| a.numerator.coeff(n)).collect();
        assert_eq!(
            num,
            vec![e(1, 0), e(0, 0), e(0, 0), e(0, 0), e(-1, 1), e(-2, -2), e(-6, -4), e(0, 0), e(8, 7)]
        );
        let ext: Vec<_> = (0..=6).map(|n| a.extended_numerator.coeff(n)).collect();
        assert_eq!(ext, vec![e(1, 0), e(0, 0), e(0, 0), e(0, 0), e(-1, 0), e(-2, -2), e(-6, -4)]);
        assert_eq!(a.first_numerator_term(), Some((4, e(-1, 1))));
    }

    #[test]
    fn geometric_series() {
        let s = BigradedSeries::one(5).divide_by_factor(1, Eigen::Plus).unwrap();
        assert!(s.coeffs().iter().all(|&c| c == EpsInt::ONE));
        let back = s.mul_factor(1, Eigen::Plus);
        assert_eq!(back, BigradedSeries::one(5));
    }

    #[test]
    fn factor_divided_by_itself() {
        let f = BigradedSeries::one(8).mul_factor(4, Eigen::Minus);
        assert_eq!(f.divide_by_factor(4, Eigen::Minus).unwrap(), BigradedSeries::one(8));
        assert_eq!(f.divide(&f).unwrap(), BigradedSeries::one(8));
    }

    #[test]
    fn non_unit_constant_is_rejected() {
        let s = BigradedSeries::one(3);
        assert!(s.divide_by_factor(0, Eigen::Minus).is_err());
        let bad = BigradedSeries::from_coeffs(vec![e(1, -1), e(0, 0)]).unwrap();
        assert!(s.divide(&bad).is_err());
        let unit = BigradedSeries::from_coeffs(vec![e(0, -1), e(2, 0)]).unwrap();
        assert!(s.divide(&unit).is_ok());
    }

    #[test]
    fn eps_display() {
        assert_eq!(e(8, 7).to_string(), "7e+8");
        assert_eq!(e(-1, 1).to_string(), "e-1");
        assert_eq!(e(-2, -2).to_string(), "-2e-2");
        assert_eq!(e(-1, 0).to_string(), "-1");
        assert_eq!(DenominatorSpec::godeaux_cover().to_string(),
            "(1-et)(1-t^2)(1-et^2)(1-et^2)(1-t^3)(1-t^3)(1-et^3)(1-et^3)");
    }
}
