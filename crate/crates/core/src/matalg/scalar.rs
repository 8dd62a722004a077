use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Gaussian rational `re + im·i` with exact arbitrary-precision parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussScalar {
    re: BigRational,
    im: BigRational,
}

impl GaussScalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussScalar { re, im }
    }

    pub fn real(re: BigRational) -> Self {
        GaussScalar { re, im: BigRational::zero() }
    }

    pub fn int(n: i64) -> Self {
        Self::real(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::real(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn complex(re: (i64, i64), im: (i64, i64)) -> Self {
        GaussScalar {
            re: BigRational::new(BigInt::from(re.0), BigInt::from(re.1)),
            im: BigRational::new(BigInt::from(im.0), BigInt::from(im.1)),
        }
    }

    pub fn i() -> Self {
        GaussScalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|²`, always a non-negative rational.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussScalar { re: &self.re / &n, im: -(&self.im / &n) })
    }
}

impl Default for GaussScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for GaussScalar {
    fn from(n: i64) -> Self {
        Self::int(n)
    }
}

impl From<BigRational> for GaussScalar {
    fn from(r: BigRational) -> Self {
        Self::real(r)
    }
}

impl Add<&GaussScalar> for &GaussScalar {
    type Output = GaussScalar;
    fn add(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub<&GaussScalar> for &GaussScalar {
    type Output = GaussScalar;
    fn sub(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul<&GaussScalar> for &GaussScalar {
    type Output = GaussScalar;
    fn mul(self, rhs: &GaussScalar) -> GaussScalar {
        GaussScalar { re: &self.re * &rhs.re - &self.im * &rhs.im, im: &self.re * &rhs.im + &self.im * &rhs.re }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&GaussScalar> for &GaussScalar {
    type Output = GaussScalar;
    /// Panics on division by zero.
    fn div(self, rhs: &GaussScalar) -> GaussScalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        GaussScalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<GaussScalar> for GaussScalar {
            type Output = GaussScalar;
            fn $m(self, rhs: GaussScalar) -> GaussScalar { (&self).$m(&rhs) }
        }
        impl $tr<&GaussScalar> for GaussScalar {
            type Output = GaussScalar;
            fn $m(self, rhs: &GaussScalar) -> GaussScalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for GaussScalar {
    type Output = GaussScalar;
    fn neg(self) -> GaussScalar {
        -&self
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `a/b`, `c/d i`, or `a/b+c/d i` (`-` for a negative imaginary part).
impl fmt::Display for GaussScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            return write!(f, "{} i", fmt_rational(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{} i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseScalarError(pub String);

impl fmt::Display for ParseScalarError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid scalar `{}`", self.0)
    }
}

impl std::error::Error for ParseScalarError {}

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, ParseScalarError> {
    let s = s.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(ParseScalarError(whole.to_string()));
    }
    let r = BigRational::from_str(s).map_err(|_| ParseScalarError(whole.to_string()))?;
    Ok(r)
}

impl FromStr for GaussScalar {
    type Err = ParseScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(body) = t.strip_suffix('i') else {
            return Ok(GaussScalar::real(parse_rational(&t, s)?));
        };
        // the imaginary part starts at the last sign that is not leading
        let split = body.char_indices().filter(|&(i, c)| i > 0 && (c == '+' || c == '-')).map(|(i, _)| i).next_back();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i], s)?, &body[i..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other, s)?,
        };
        Ok(GaussScalar { re, im })
    }
}
