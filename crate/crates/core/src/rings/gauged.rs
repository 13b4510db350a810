//! Functions of the form zeta^(r/2) * exp(e2 zeta^2 + e4 zeta^4) * B(zeta)
//! with a Laurent-polynomial body B over the number field.
//!
//! The gauge exponent r/2 is usually a half-integer (r integer), but it is
//! carried as an exact rational so that the tau functions sigma_n, whose
//! gauge contains zeta^(-5/24), fit in the same type. Canonical form folds
//! the integer part of r/2 into the body, so two values compare equal
//! exactly when they are the same function.

use std::fmt;

use super::{Poly, Var};
use crate::scalars::{NFScalar, Rational, Scalar};
use crate::Error;

#[derive(Clone, PartialEq)]
pub struct GaugedFunction {
    /// Exponent numerator: the gauge carries zeta^(half_power / 2).
    /// Canonically 0 <= half_power/2 < 1.
    half_power: Rational,
    e2: Rational,
    e4: Rational,
    body: Poly<NFScalar>,
}

impl GaugedFunction {
    pub fn new(half_power: Rational, e2: Rational, e4: Rational, body: Poly<NFScalar>) -> Self {
        assert_eq!(body.var(), Var::Zeta, "gauged functions live in zeta");
        let mut g = GaugedFunction {
            half_power,
            e2,
            e4,
            body,
        };
        g.canonicalize();
        g
    }

    /// Integer r: the plain half-power gauge zeta^(r/2).
    pub fn with_integer_r(r: i64, e2: Rational, e4: Rational, body: Poly<NFScalar>) -> Self {
        GaugedFunction::new(Rational::from_int(r), e2, e4, body)
    }

    pub fn zero() -> Self {
        GaugedFunction {
            half_power: Rational::zero(),
            e2: Rational::zero(),
            e4: Rational::zero(),
            body: Poly::zero(Var::Zeta),
        }
    }

    pub fn one() -> Self {
        GaugedFunction::new(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Poly::one(Var::Zeta),
        )
    }

    pub fn from_body(body: Poly<NFScalar>) -> Self {
        GaugedFunction::new(Rational::zero(), Rational::zero(), Rational::zero(), body)
    }

    fn canonicalize(&mut self) {
        if self.body.is_zero() {
            self.half_power = Rational::zero();
            self.e2 = Rational::zero();
            self.e4 = Rational::zero();
            return;
        }
        // Fold floor(half_power/2) whole powers of zeta into the body.
        let w = Scalar::mul(&self.half_power, &Rational::new(1, 2));
        let whole = w.floor_bigint();
        if let Some(shift) = i64::try_from(&whole).ok().filter(|s| *s != 0) {
            self.body = self.body.shift(shift);
            self.half_power = Scalar::sub(&self.half_power, &Rational::from_int(2 * shift));
        }
    }

    pub fn half_power(&self) -> &Rational {
        &self.half_power
    }

    pub fn e2(&self) -> &Rational {
        &self.e2
    }

    pub fn e4(&self) -> &Rational {
        &self.e4
    }

    pub fn body(&self) -> &Poly<NFScalar> {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn same_gauge(&self, other: &Self) -> bool {
        self.is_zero()
            || other.is_zero()
            || (self.half_power == other.half_power && self.e2 == other.e2 && self.e4 == other.e4)
    }

    /// Addition requires matching gauges; no implicit coercion.
    pub fn add(&self, rhs: &Self) -> Result<Self, Error> {
        if self.is_zero() {
            return Ok(rhs.clone());
        }
        if rhs.is_zero() {
            return Ok(self.clone());
        }
        if !self.same_gauge(rhs) {
            return Err(Error::GaugeMismatch(format!(
                "cannot add gauge (r/2={}, e2={}, e4={}) to (r/2={}, e2={}, e4={})",
                Scalar::mul(&self.half_power, &Rational::new(1, 2)),
                self.e2,
                self.e4,
                Scalar::mul(&rhs.half_power, &Rational::new(1, 2)),
                rhs.e2,
                rhs.e4,
            )));
        }
        Ok(GaugedFunction::new(
            self.half_power.clone(),
            self.e2.clone(),
            self.e4.clone(),
            &self.body + &rhs.body,
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, Error> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        GaugedFunction {
            half_power: self.half_power.clone(),
            e2: self.e2.clone(),
            e4: self.e4.clone(),
            body: self.body.neg(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return GaugedFunction::zero();
        }
        GaugedFunction::new(
            Scalar::add(&self.half_power, &rhs.half_power),
            Scalar::add(&self.e2, &rhs.e2),
            Scalar::add(&self.e4, &rhs.e4),
            &self.body * &rhs.body,
        )
    }

    pub fn scalar_mul(&self, c: &NFScalar) -> Self {
        GaugedFunction::new(
            self.half_power.clone(),
            self.e2.clone(),
            self.e4.clone(),
            self.body.scalar_mul(c),
        )
    }

    /// Multiply the body by a Laurent polynomial (gauge unchanged).
    pub fn mul_body(&self, p: &Poly<NFScalar>) -> Self {
        GaugedFunction::new(
            self.half_power.clone(),
            self.e2.clone(),
            self.e4.clone(),
            &self.body * p,
        )
    }

    /// n-th power of the gauge factor alone: zeta^(n r/2) exp(n e2 zeta^2 +
    /// n e4 zeta^4), with body `body`.
    pub fn gauge_power(&self, n: i64, body: Poly<NFScalar>) -> Self {
        let nr = Rational::from_int(n);
        GaugedFunction::new(
            Scalar::mul(&self.half_power, &nr),
            Scalar::mul(&self.e2, &nr),
            Scalar::mul(&self.e4, &nr),
            body,
        )
    }

    /// Logarithmic derivative of the gauge factor with respect to z, as a
    /// Laurent polynomial:
    ///   d/dz zeta^(r/2) = (r/12) zeta^(r/2 - 3),
    ///   d/dz exp(e2 zeta^2) -> (e2/3) zeta^(-1),
    ///   d/dz exp(e4 zeta^4) -> (2 e4/3) zeta.
    pub fn gauge_log_d_dz(&self) -> Poly<NFScalar> {
        let mut terms = Poly::zero(Var::Zeta);
        let w6 = Scalar::mul(&self.half_power, &Rational::new(1, 12));
        if !w6.is_zero() {
            terms = &terms + &Poly::monomial(Var::Zeta, -3, NFScalar::from_rational(&w6));
        }
        let e2_3 = Scalar::mul(&self.e2, &Rational::new(1, 3));
        if !e2_3.is_zero() {
            terms = &terms + &Poly::monomial(Var::Zeta, -1, NFScalar::from_rational(&e2_3));
        }
        let e4_23 = Scalar::mul(&self.e4, &Rational::new(2, 3));
        if !e4_23.is_zero() {
            terms = &terms + &Poly::monomial(Var::Zeta, 1, NFScalar::from_rational(&e4_23));
        }
        terms
    }

    /// Derivative with respect to z: product rule over the gauge factor
    /// and the body.
    pub fn d_dz(&self) -> Self {
        if self.is_zero() {
            return GaugedFunction::zero();
        }
        let body = &self.body.d_dz() + &(&self.gauge_log_d_dz() * &self.body);
        GaugedFunction::new(
            self.half_power.clone(),
            self.e2.clone(),
            self.e4.clone(),
            body,
        )
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "half_power": self.half_power.to_string(),
            "e2": self.e2.to_string(),
            "e4": self.e4.to_string(),
            "body": self.body.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let field = |name: &str| -> Result<Rational, Error> {
            v.get(name)
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Invalid(format!("gauged function missing {name:?}")))?
                .parse()
        };
        let body = Poly::from_json(
            v.get("body")
                .ok_or_else(|| Error::Invalid("gauged function missing \"body\"".into()))?,
        )?;
        Ok(GaugedFunction::new(
            field("half_power")?,
            field("e2")?,
            field("e4")?,
            body,
        ))
    }
}

impl fmt::Display for GaugedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let w = Scalar::mul(&self.half_power, &Rational::new(1, 2));
        if !w.is_zero() {
            write!(f, "zeta^({w}) ")?;
        }
        if !self.e2.is_zero() || !self.e4.is_zero() {
            write!(f, "exp(")?;
            if !self.e2.is_zero() {
                write!(f, "({})*zeta^2", self.e2)?;
            }
            if !self.e4.is_zero() {
                if !self.e2.is_zero() {
                    write!(f, " + ")?;
                }
                write!(f, "({})*zeta^4", self.e4)?;
            }
            write!(f, ") ")?;
        }
        write!(f, "* [{}]", self.body)
    }
}

impl fmt::Debug for GaugedFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
