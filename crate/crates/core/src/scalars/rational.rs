//! Arbitrary-precision rational numbers.
//!
//! Thin newtype over `num_rational::BigRational`, which keeps every value
//! reduced to lowest terms with a positive denominator. The newtype pins
//! the exact "p/q" serialization and the trait surface the rest of the
//! crate relies on.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Scalar;
use crate::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "Rational::new: zero denominator");
        Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "Rational::from_big: zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "Rational::inv of zero");
        Rational(self.0.clone().recip())
    }

    pub fn floor_bigint(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Fractional part in [0, 1): self - floor(self).
    pub fn fract(&self) -> Self {
        Rational(self.0.clone() - self.0.floor())
    }

    pub fn to_f64(&self) -> f64 {
        // Falls back to a scaled conversion when numerator/denominator
        // individually overflow f64.
        self.0.to_f64().unwrap_or_else(|| {
            let num_bits = self.0.numer().bits() as i64;
            let den_bits = self.0.denom().bits() as i64;
            let shift = (num_bits.max(den_bits) - 900).max(0) as u64;
            let num = self.0.numer() >> shift;
            let den = self.0.denom() >> shift;
            if den.is_zero() {
                if self.0.numer().is_negative() {
                    f64::NEG_INFINITY
                } else {
                    f64::INFINITY
                }
            } else {
                BigRational::new(num, den).to_f64().unwrap_or(f64::NAN)
            }
        })
    }

    /// Decimal rendering with `digits` places after the point, rounding
    /// half away from zero. Exact inputs like 4/3 render as "1.333...".
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let sign = if self.is_negative() { "-" } else { "" };
        let num = self.numer().abs().to_biguint().expect("abs");
        let den = self.denom().to_biguint().expect("positive denominator");
        let scale = BigUint::from(10u32).pow(digits as u32);
        // round(|self| * 10^digits)
        let scaled = (&num * &scale * 2u32 + &den) / (&den * 2u32);
        let int_part = &scaled / &scale;
        let frac_part = &scaled % &scale;
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_part:0>width$}", width = digits)
        }
    }

    /// Round to the nearest multiple of 2^-bits. Used by the numeric Airy
    /// evaluator to keep exact-rational series sums from growing without
    /// bound.
    pub fn round_to_bits(&self, bits: u32) -> Self {
        if self.is_zero() {
            return Rational::zero();
        }
        let scale = BigInt::from(1) << bits;
        let scaled = &self.0 * BigRational::from_integer(scale.clone());
        let rounded = scaled.round().to_integer();
        Rational(BigRational::new(rounded, scale))
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, rhs: &Self) -> Self {
        Rational(&self.0 + &rhs.0)
    }

    fn sub(&self, rhs: &Self) -> Self {
        Rational(&self.0 - &rhs.0)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Rational(&self.0 * &rhs.0)
    }

    fn neg(&self) -> Self {
        Rational(-self.0.clone())
    }

    fn div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "Rational division by zero");
        Rational(&self.0 / &rhs.0)
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Scalar::div(self, rhs))
        }
    }

    fn to_rational(&self) -> Result<Rational, Error> {
        Ok(self.clone())
    }

    fn to_nf(&self) -> super::NFScalar {
        super::NFScalar::from_rational(self)
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::String(self.to_string())
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let s = v
            .as_str()
            .ok_or_else(|| Error::Invalid(format!("expected string for rational, got {v}")))?;
        s.parse()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts "p", "p/q", and decimal forms like "-1.25".
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let bad = || Error::Invalid(format!("cannot parse rational from {s:?}"));
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(den.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int, frac)) = s.split_once('.') {
            let negative = int.trim_start().starts_with('-');
            let i = if int.is_empty() || int == "-" {
                BigInt::zero()
            } else {
                BigInt::from_str(int).map_err(|_| bad())?
            };
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let f = BigInt::from_str(frac).map_err(|_| bad())?;
            let scale = BigInt::from(10u32).pow(frac.len() as u32);
            let mag = i.abs() * &scale + f;
            let signed = if negative { -mag } else { mag };
            return Ok(Rational(BigRational::new(signed, scale)));
        }
        let n = BigInt::from_str(s).map_err(|_| bad())?;
        Ok(Rational(BigRational::from_integer(n)))
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<(i64, i64)> for Rational {
    fn from((n, d): (i64, i64)) -> Self {
        Rational::new(n, d)
    }
}

macro_rules! impl_rational_ops {
    ($trait:ident, $method:ident, $scalar_method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Scalar::$scalar_method(self, rhs)
            }
        }
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Scalar::$scalar_method(&self, &rhs)
            }
        }
    };
}

impl_rational_ops!(Add, add, add);
impl_rational_ops!(Sub, sub, sub);
impl_rational_ops!(Mul, mul, mul);
impl_rational_ops!(Div, div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Scalar::neg(&self)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Scalar::neg(self)
    }
}
