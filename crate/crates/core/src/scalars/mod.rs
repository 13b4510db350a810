//! Exact scalar arithmetic.
//!
//! Two coefficient domains are supported: arbitrary-precision rationals,
//! and the degree-4 number field Q[y]/(y^4 - 3) in which y represents
//! 3^(1/4) and y^2 represents sqrt(3). Everything downstream (polynomials,
//! rational functions, Wronskians) is generic over the [`Scalar`] trait.

mod number_field;
mod rational;

pub use number_field::NFScalar;
pub use rational::Rational;

use crate::Error;

/// Exact field operations needed by the polynomial layer.
///
/// Values are immutable; all operations are pure and allocate fresh
/// results, so they are safe to share and send between threads.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug + std::fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Field division. Panics on a zero divisor; use `checked_div` where
    /// the divisor is not known to be non-zero.
    fn div(&self, rhs: &Self) -> Self;
    fn checked_div(&self, rhs: &Self) -> Result<Self, Error>;
    /// Demote to a plain rational, failing with the offending radical
    /// components when the element is genuinely irrational.
    fn to_rational(&self) -> Result<Rational, Error>;
    /// Promote into Q[y]/(y^4 - 3).
    fn to_nf(&self) -> NFScalar;
    /// Exact JSON form: a "p/q" string for rationals, a 4-array of such
    /// strings for number-field elements.
    fn to_json(&self) -> serde_json::Value;
    fn from_json(v: &serde_json::Value) -> Result<Self, Error>;

    fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Integer power with negative exponents (panics if base is zero and
    /// the exponent is negative).
    fn powi(&self, n: i64) -> Self {
        if n >= 0 {
            self.pow(n as u32)
        } else {
            Self::one().div(&self.pow((-n) as u32))
        }
    }
}
