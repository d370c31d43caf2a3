//! Field elements in the two supported regimes: exact rationals over
//! arbitrary-precision integers, and IEEE 754 binary64.

use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// The arithmetic regime of a computation. Never mixed within one matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarMode {
    Rational,
    F64,
}

impl ScalarMode {
    pub fn is_exact(self) -> bool {
        matches!(self, ScalarMode::Rational)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ScalarMode::Rational => "rational",
            ScalarMode::F64 => "f64",
        }
    }
}

impl FromStr for ScalarMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "rational" | "exact" => Ok(ScalarMode::Rational),
            "f64" | "float" => Ok(ScalarMode::F64),
            other => Err(Error::parse("scalar_mode", format!("unknown scalar mode {other:?}"))),
        }
    }
}

impl Display for ScalarMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A field element usable by every kernel in this crate.
///
/// Equality-sensitive code goes through [`Scalar::approx_eq`] and
/// [`Scalar::is_negligible`], which are literal in the exact regime.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + PartialOrd
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + 'static
{
    const MODE: ScalarMode;

    fn from_bigint(v: &BigInt) -> Self;

    fn from_i64(v: i64) -> Self;

    /// `num / den`; `den` must be nonzero.
    fn from_ratio(num: i64, den: i64) -> Self;

    /// `|self|` as a float, used for pivot selection and tolerances.
    fn magnitude(&self) -> f64;

    fn abs(&self) -> Self;

    /// `self += a * b`.
    fn mul_add_assign(&mut self, a: &Self, b: &Self);

    /// Literal equality for exact scalars; `|self - other| <= tol` for floats.
    fn approx_eq(&self, other: &Self, tol: f64) -> bool;

    /// Literal zero test for exact scalars; `|self| <= tol` for floats.
    fn is_negligible(&self, tol: f64) -> bool;

    /// Lossless textual encoding (`"p/q"` or `"p"` for rationals, shortest
    /// round-trip decimal for floats).
    fn encode(&self) -> String;

    fn decode(text: &str) -> Result<Self>;

    /// One entry of a random test matrix: numerator in [-9, 9] over a
    /// denominator in [1, 9] for rationals, uniform in [-1, 1] for floats.
    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn is_exact() -> bool {
        Self::MODE.is_exact()
    }

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for Rational {
    const MODE: ScalarMode = ScalarMode::Rational;

    fn from_bigint(v: &BigInt) -> Self {
        Rational::from_integer(v.clone())
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    fn magnitude(&self) -> f64 {
        Signed::abs(self).to_f64().unwrap_or(f64::INFINITY)
    }

    fn abs(&self) -> Self {
        Signed::abs(self)
    }

    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        *self += a * b;
    }

    fn approx_eq(&self, other: &Self, _tol: f64) -> bool {
        self == other
    }

    fn is_negligible(&self, _tol: f64) -> bool {
        self.is_zero()
    }

    fn encode(&self) -> String {
        if self.denom().is_one() {
            self.numer().to_string()
        } else {
            format!("{}/{}", self.numer(), self.denom())
        }
    }

    fn decode(text: &str) -> Result<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| Error::parse(text, format!("invalid rational numerator {num:?}")))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| Error::parse(text, format!("invalid rational denominator {den:?}")))?;
        if den.is_zero() {
            return Err(Error::parse(text, "zero denominator"));
        }
        Ok(Rational::new(num, den))
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let num = rng.gen_range(-9i64..=9);
        let den = rng.gen_range(1i64..=9);
        Self::from_ratio(num, den)
    }
}

impl Scalar for f64 {
    const MODE: ScalarMode = ScalarMode::F64;

    fn from_bigint(v: &BigInt) -> Self {
        v.to_f64().unwrap_or(f64::NAN)
    }

    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        num as f64 / den as f64
    }

    fn magnitude(&self) -> f64 {
        f64::abs(*self)
    }

    fn abs(&self) -> Self {
        f64::abs(*self)
    }

    #[inline(always)]
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }

    fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        (self - other).abs() <= tol
    }

    fn is_negligible(&self, tol: f64) -> bool {
        f64::abs(*self) <= tol
    }

    fn encode(&self) -> String {
        format!("{self:?}")
    }

    fn decode(text: &str) -> Result<Self> {
        let text = text.trim();
        let v: f64 = text
            .parse()
            .map_err(|_| Error::parse(text, "invalid floating-point literal"))?;
        if !v.is_finite() {
            return Err(Error::parse(text, "non-finite floating-point literal"));
        }
        Ok(v)
    }

    fn sample<R: Rng + ?Sized>(rng: &mut R) -> Self {
        rng.gen_range(-1.0..=1.0)
    }
}

/// `(-1)^k` in the scalar field.
pub fn sign<S: Scalar>(k: usize) -> S {
    if k.is_multiple_of(2) {
        S::one()
    } else {
        -S::one()
    }
}

/// `base^exp` by repeated squaring.
pub fn pow<S: Scalar>(base: &S, mut exp: usize) -> S {
    let mut result = S::one();
    let mut acc = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            result *= acc.clone();
        }
        exp >>= 1;
        if exp > 0 {
            acc = acc.clone() * acc;
        }
    }
    result
}

/// `k!` as an exact integer.
pub fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
