//! Quotients of univariate polynomials, kept reduced with a monic
//! denominator.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{GcdScalar, Poly, Var};
use crate::scalars::{Rational, Scalar};
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction<F: GcdScalar> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: GcdScalar> RationalFunction<F> {
    /// gcd-reduced quotient with monic denominator. Laurent inputs are
    /// cleared into ordinary polynomials first.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RationalFunction {
                num: Poly::zero(den.var()),
                den: Poly::one(den.var()),
            });
        }
        assert_eq!(num.var(), den.var(), "mixed-variable rational function");
        // Clear negative exponents: multiply both sides by var^t.
        let t = (-num.lowest_exp().min(den.lowest_exp())).max(0);
        let mut num = num.shift(t);
        let mut den = den.shift(t);
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.exact_div(&g).expect("gcd divides numerator");
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let lc = den.leading_coeff();
        Ok(RationalFunction {
            num: num.scalar_div(&lc),
            den: den.scalar_div(&lc),
        })
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RationalFunction::new(p.clone(), Poly::one(p.var())).expect("denominator one")
    }

    pub fn zero(var: Var) -> Self {
        RationalFunction::from_poly(Poly::zero(var))
    }

    pub fn one(var: Var) -> Self {
        RationalFunction::from_poly(Poly::one(var))
    }

    pub fn constant(var: Var, c: F) -> Self {
        RationalFunction::from_poly(Poly::constant(var, c))
    }

    pub fn variable(var: Var) -> Self {
        RationalFunction::from_poly(Poly::variable(var))
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn var(&self) -> Var {
        self.den.var()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    /// The constant value when this is a constant; None otherwise.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("non-zero denominator")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        RationalFunction::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("non-zero denominator")
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, Error> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RationalFunction::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn inv(&self) -> Result<Self, Error> {
        Self::one(self.var()).div(self)
    }

    pub fn scalar_mul(&self, c: &F) -> Self {
        RationalFunction::new(self.num.scalar_mul(c), self.den.clone()).expect("same denominator")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.var());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Derivative with respect to the physical variable (quotient rule on
    /// top of `Poly::d_dz`).
    pub fn d_dz(&self) -> Self {
        let num = &(&self.num.d_dz() * &self.den) - &(&self.num * &self.den.d_dz());
        let den = &self.den * &self.den;
        RationalFunction::new(num, den).expect("non-zero denominator")
    }

    /// Evaluate; an error marks a pole of the reduced form.
    pub fn eval(&self, x: &F) -> Result<F, Error> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(x).div(&d))
    }

    pub fn map_coeffs<G: GcdScalar>(&self, f: impl Fn(&F) -> G) -> RationalFunction<G> {
        RationalFunction {
            num: self.num.map_coeffs(&f),
            den: self.den.map_coeffs(&f),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "num": self.num.to_json(),
            "den": self.den.to_json(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let num = Poly::from_json(
            v.get("num")
                .ok_or_else(|| Error::Invalid("rational function missing \"num\"".into()))?,
        )?;
        let den = Poly::from_json(
            v.get("den")
                .ok_or_else(|| Error::Invalid("rational function missing \"den\"".into()))?,
        )?;
        RationalFunction::new(num, den)
    }
}

impl RationalFunction<Rational> {
    /// Demote a number-field rational function whose reduced coefficients
    /// are all rational.
    pub fn from_nf(rf: &RationalFunction<crate::scalars::NFScalar>) -> Result<Self, Error> {
        let num = rf.num.try_map_coeffs(|c| c.to_rational())?;
        let den = rf.den.try_map_coeffs(|c| c.to_rational())?;
        RationalFunction::new(num, den)
    }
}

impl fmt::Display for RationalFunction<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl<F: GcdScalar> fmt::Debug for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}) / ({:?})", self.num, self.den)
    }
}

macro_rules! impl_rf_ops {
    ($trait:ident, $method:ident) => {
        impl<F: GcdScalar> $trait<&RationalFunction<F>> for &RationalFunction<F> {
            type Output = RationalFunction<F>;
            fn $method(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
                RationalFunction::$method(self, rhs)
            }
        }
    };
}

impl_rf_ops!(Add, add);
impl_rf_ops!(Sub, sub);
impl_rf_ops!(Mul, mul);

impl<F: GcdScalar> Div<&RationalFunction<F>> for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn div(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        RationalFunction::div(self, rhs).expect("division by zero rational function")
    }
}

impl<F: GcdScalar> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction::neg(self)
    }
}
