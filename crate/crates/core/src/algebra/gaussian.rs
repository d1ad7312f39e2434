//! Exact arithmetic in the Gaussian rationals Q(i).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `re + im*i` of Q(i).
///
/// Both parts are `BigRational`, which keeps them in lowest terms with a
/// positive denominator after every operation.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    /// `num/den`, panicking on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(
            BigRational::new(num.into(), den.into()),
            BigRational::zero(),
        )
    }

    /// `(re_num/re_den) + (im_num/im_den)*i`.
    pub fn complex(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self::new(
            BigRational::new(re_num.into(), re_den.into()),
            BigRational::new(im_num.into(), im_den.into()),
        )
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    pub fn scale_int(&self, k: i64) -> Self {
        let k = BigRational::from_integer(k.into());
        Self::new(&self.re * &k, &self.im * &k)
    }

    /// Square root in Q(i), when one exists.
    ///
    /// Of the two roots, the one with positive real part (or positive
    /// imaginary part when the real part is zero) is returned.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // (x + y i)^2 = a + b i  =>  x^2 = (a + |z|)/2, y^2 = (|z| - a)/2
        let modulus = rational_sqrt(&self.norm())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&self.re + &modulus) / &two))?;
        let y_abs = rational_sqrt(&((&modulus - &self.re) / &two))?;
        let y = if x.is_zero() {
            y_abs
        } else {
            // 2xy = b fixes the sign of y once x > 0 is chosen
            &self.im / (&two * &x)
        };
        let root = Self::new(x, y);
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }
}

/// Exact square root of a non-negative rational, when it is a perfect square.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = int_sqrt(q.numer())?;
    let d = int_sqrt(q.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::new(BigRational::one(), BigRational::zero())
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<BigRational> for GaussianRational {
    fn from(q: BigRational) -> Self {
        Self::new(q, BigRational::zero())
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inv().expect("division by zero in Q(i)");
        self * &inv
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;
            fn $f(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl GaussianRational {
    /// True when the value prints as a single signed rational or imaginary
    /// term, i.e. it needs no parentheses inside a product.
    pub fn is_simple(&self) -> bool {
        self.re.is_zero() || self.im.is_zero()
    }

    /// Leading sign used when printing polynomial terms: the sign of the real
    /// part, or of the imaginary part for pure imaginaries.
    pub fn is_negative_display(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative()
        }
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |q: &BigRational| -> String {
            if q.is_one() {
                "i".to_string()
            } else if (-q).is_one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(q))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                let im = imag(&self.im);
                if im.starts_with('-') {
                    write!(f, "{}{}", fmt_rational(&self.re), im)
                } else {
                    write!(f, "{}+{}", fmt_rational(&self.re), im)
                }
            }
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    /// Accepts `p`, `p/q`, `p/q*i`, `i`, `p/q+r/s*i` and any constant
    /// expression in the polynomial grammar.
    fn from_str(s: &str) -> Result<Self> {
        crate::algebra::parse::parse_scalar(s)
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Text(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(n) => Ok(GaussianRational::from_integer(n)),
            Raw::Text(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}
