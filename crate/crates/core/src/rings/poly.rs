//! Laurent-capable univariate polynomials over an exact scalar field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::Var;
use crate::scalars::{Rational, Scalar};
use crate::Error;

/// coeffs[i] is the coefficient of var^(lowest + i). Invariants: the
/// first and last stored coefficients are non-zero; the zero polynomial
/// is the empty list with lowest = 0.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly<F: Scalar> {
    var: Var,
    lowest: i64,
    coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn new(var: Var, lowest: i64, coeffs: Vec<F>) -> Self {
        let mut p = Poly {
            var,
            lowest,
            coeffs,
        };
        p.normalize();
        p
    }

    /// Ordinary polynomial from ascending coefficients.
    pub fn from_coeffs(var: Var, coeffs: Vec<F>) -> Self {
        Poly::new(var, 0, coeffs)
    }

    pub fn from_int_coeffs(var: Var, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(var, coeffs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        Poly {
            var,
            lowest: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, F::one())
    }

    pub fn constant(var: Var, c: F) -> Self {
        Poly::new(var, 0, vec![c])
    }

    /// c * var^k.
    pub fn monomial(var: Var, k: i64, c: F) -> Self {
        Poly::new(var, k, vec![c])
    }

    pub fn variable(var: Var) -> Self {
        Poly::monomial(var, 1, F::one())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let leading_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading_zeros > 0 {
            self.coeffs.drain(..leading_zeros);
            self.lowest += leading_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.lowest = 0;
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.lowest == 0 && self.coeffs.len() == 1 && self.coeffs[0] == F::one()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lowest == 0 && self.coeffs.len() == 1)
    }

    /// True when no negative powers are present.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.lowest >= 0
    }

    /// The constant value when this is a constant polynomial.
    pub fn as_constant(&self) -> Option<F> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn lowest_exp(&self) -> i64 {
        self.lowest
    }

    /// Highest exponent; None for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lowest + self.coeffs.len() as i64 - 1)
        }
    }

    pub fn leading_coeff(&self) -> F {
        self.coeffs.last().cloned().unwrap_or_else(F::zero)
    }

    pub fn coeff(&self, k: i64) -> F {
        let idx = k - self.lowest;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            F::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Ascending (exponent, coefficient) pairs over stored terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &F)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lowest + i as i64, c))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.var, self.lowest, self.coeffs.iter().map(f).collect())
    }

    pub fn try_map_coeffs<G: Scalar, E>(
        &self,
        f: impl Fn(&F) -> Result<G, E>,
    ) -> Result<Poly<G>, E> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(f(c)?);
        }
        Ok(Poly::new(self.var, self.lowest, coeffs))
    }

    /// Re-tag the variable (e.g. evaluate theta_k(x) at x -> z).
    pub fn with_var(&self, var: Var) -> Self {
        Poly {
            var,
            lowest: self.lowest,
            coeffs: self.coeffs.clone(),
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(
            self.var, other.var,
            "mixed-variable polynomial arithmetic: {} vs {}",
            self.var, other.var
        );
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lowest = self.lowest.min(rhs.lowest);
        let highest = self.degree().unwrap().max(rhs.degree().unwrap());
        let mut coeffs = Vec::with_capacity((highest - lowest + 1) as usize);
        for k in lowest..=highest {
            coeffs.push(self.coeff(k).add(&rhs.coeff(k)));
        }
        Poly::new(self.var, lowest, coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            var: self.var,
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_var(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Poly::new(self.var, self.lowest + rhs.lowest, coeffs)
    }

    pub fn scalar_mul(&self, c: &F) -> Self {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly {
            var: self.var,
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }

    pub fn scalar_div(&self, c: &F) -> Self {
        assert!(!c.is_zero(), "scalar division by zero");
        Poly {
            var: self.var,
            lowest: self.lowest,
            coeffs: self.coeffs.iter().map(|a| a.div(c)).collect(),
        }
    }

    /// Multiply by var^k.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Poly {
            var: self.var,
            lowest: self.lowest + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::one(self.var);
        for _ in 0..n {
            acc = Poly::mul(&acc, self);
        }
        acc
    }

    /// Derivative with respect to the polynomial's own variable.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .terms()
            .map(|(k, c)| (k - 1, c.mul(&F::from_int(k))))
            .collect::<Vec<_>>();
        Poly::from_terms(self.var, coeffs)
    }

    /// Derivative with respect to the physical variable z. For zeta-tagged
    /// objects this is (1/(6 zeta^2)) d/dzeta since z = 2 zeta^3; for x, z
    /// and s it is the ordinary derivative in the tagged variable.
    pub fn d_dz(&self) -> Self {
        match self.var {
            Var::Zeta => {
                let sixth = F::from_rational(&Rational::new(1, 6));
                let coeffs = self
                    .terms()
                    .map(|(k, c)| (k - 3, c.mul(&F::from_int(k)).mul(&sixth)))
                    .collect::<Vec<_>>();
                Poly::from_terms(self.var, coeffs)
            }
            _ => self.derivative(),
        }
    }

    fn from_terms(var: Var, terms: Vec<(i64, F)>) -> Self {
        let mut p = Poly::zero(var);
        if terms.is_empty() {
            return p;
        }
        let lowest = terms.iter().map(|(k, _)| *k).min().unwrap();
        let highest = terms.iter().map(|(k, _)| *k).max().unwrap();
        let mut coeffs = vec![F::zero(); (highest - lowest + 1) as usize];
        for (k, c) in terms {
            let idx = (k - lowest) as usize;
            coeffs[idx] = coeffs[idx].add(&c);
        }
        p = Poly::new(var, lowest, coeffs);
        p
    }

    /// Evaluate at a point. Negative exponents require a non-zero point.
    pub fn eval(&self, x: &F) -> F {
        if self.is_zero() {
            return F::zero();
        }
        // Horner on the stored window, then scale by x^lowest.
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        if self.lowest != 0 {
            assert!(
                self.lowest > 0 || !x.is_zero(),
                "evaluating a Laurent polynomial at zero"
            );
            acc = acc.mul(&x.powi(self.lowest));
        }
        acc
    }

    /// Substitute var -> gamma * var (exact scaling of the variable).
    pub fn scale_var(&self, gamma: &F) -> Self {
        let coeffs = self
            .terms()
            .map(|(k, c)| (k, c.mul(&gamma.powi(k))))
            .collect();
        Poly::from_terms(self.var, coeffs)
    }

    /// Long division for ordinary polynomials: self = q * divisor + r with
    /// deg r < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.check_var(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        assert!(
            self.is_polynomial() && divisor.is_polynomial(),
            "div_rem requires ordinary polynomials"
        );
        let d_deg = divisor.degree().unwrap();
        let Some(s_deg) = self.degree() else {
            return (Poly::zero(self.var), Poly::zero(self.var));
        };
        if s_deg < d_deg {
            return (Poly::zero(self.var), self.clone());
        }
        let lc = divisor.leading_coeff();
        let mut rem = self.clone();
        let mut q_terms: Vec<(i64, F)> = Vec::new();
        while let Some(r_deg) = rem.degree() {
            if r_deg < d_deg {
                break;
            }
            let factor = rem.leading_coeff().div(&lc);
            let shift = r_deg - d_deg;
            q_terms.push((shift, factor.clone()));
            rem = Poly::sub(&rem, &divisor.shift(shift).scalar_mul(&factor));
        }
        (Poly::from_terms(self.var, q_terms), rem)
    }

    /// Division that must be exact; remainders are integrity errors.
    /// Laurent inputs are handled by clearing the lowest exponents first.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self, Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Poly::zero(self.var));
        }
        let a_shift = self.lowest.min(0);
        let b_shift = divisor.lowest.min(0);
        let a = self.shift(-a_shift);
        let b = divisor.shift(-b_shift);
        let (q, r) = a.div_rem(&b);
        if !r.is_zero() {
            return Err(Error::InexactDivision(format!(
                "dividing {self} by {divisor} leaves remainder {r}"
            )));
        }
        Ok(q.shift(a_shift - b_shift))
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scalar_div(&self.leading_coeff())
    }
}

impl<F: super::GcdScalar> Poly<F> {
    /// Monic gcd of two ordinary polynomials, via the field's gcd
    /// backend.
    pub fn gcd(&self, other: &Self) -> Self {
        self.check_var(other);
        F::poly_gcd(self, other)
    }
}

impl<F: Scalar> Poly<F> {
    /// Exact JSON form, ascending coefficients from the lowest exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "var": self.var.name(),
            "lowest": self.lowest,
            "coeffs": self.coeffs.iter().map(|c| c.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Invalid(format!("expected polynomial object, got {v}")))?;
        let var = Var::from_name(
            obj.get("var")
                .and_then(|x| x.as_str())
                .ok_or_else(|| Error::Invalid("polynomial missing \"var\"".into()))?,
        )?;
        let lowest = obj
            .get("lowest")
            .and_then(|x| x.as_i64())
            .ok_or_else(|| Error::Invalid("polynomial missing \"lowest\"".into()))?;
        let coeffs = obj
            .get("coeffs")
            .and_then(|x| x.as_array())
            .ok_or_else(|| Error::Invalid("polynomial missing \"coeffs\"".into()))?
            .iter()
            .map(F::from_json)
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Poly::new(var, lowest, coeffs))
    }
}

impl Poly<Rational> {
    /// All coefficients integers.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn to_f64_at(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64();
        }
        acc * x.powi(self.lowest as i32)
    }
}

impl<F: Scalar> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{}", self.var)?,
                _ => write!(f, "({c})*{}^{}", self.var, k)?,
            }
            first = false;
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! impl_poly_ops {
    ($trait:ident, $method:ident) => {
        impl<F: Scalar> $trait<&Poly<F>> for &Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: &Poly<F>) -> Poly<F> {
                Poly::$method(self, rhs)
            }
        }
        impl<F: Scalar> $trait for Poly<F> {
            type Output = Poly<F>;
            fn $method(self, rhs: Poly<F>) -> Poly<F> {
                Poly::$method(&self, &rhs)
            }
        }
    };
}

impl_poly_ops!(Add, add);
impl_poly_ops!(Sub, sub);
impl_poly_ops!(Mul, mul);

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        Poly::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type QPoly = Poly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn normalization_trims_zeros() {
        let p = QPoly::new(
            Var::Z,
            -1,
            vec![Rational::zero(), q(1, 1), q(2, 1), Rational::zero()],
        );
        assert_eq!(p.lowest_exp(), 0);
        assert_eq!(p.degree(), Some(1));
    }

    #[test]
    fn d_dz_of_zeta_cubed_is_one_half() {
        // zeta^3 = z/2, so d/dz zeta^3 = 1/2
        let p = QPoly::monomial(Var::Zeta, 3, Rational::one());
        assert_eq!(p.d_dz(), QPoly::constant(Var::Zeta, q(1, 2)));
    }

    #[test]
    fn d_dz_of_zeta_is_chain_rule() {
        // d/dz zeta = (1/6) zeta^-2
        let p = QPoly::variable(Var::Zeta);
        assert_eq!(p.d_dz(), QPoly::monomial(Var::Zeta, -2, q(1, 6)));
    }

    #[test]
    fn derivative_in_own_variable() {
        // d/dz (z^3/3 - 4) = z^2
        let p = QPoly::new(Var::Z, 0, vec![q(-4, 1), q(0, 1), q(0, 1), q(1, 3)]);
        assert_eq!(p.d_dz(), QPoly::monomial(Var::Z, 2, Rational::one()));
    }

    #[test]
    fn laurent_multiplication() {
        // (zeta^-1 + 1)(zeta - 1) = zeta - zeta^-1
        let a = QPoly::new(Var::Zeta, -1, vec![q(1, 1), q(1, 1)]);
        let b = QPoly::new(Var::Zeta, 0, vec![q(-1, 1), q(1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod, QPoly::new(Var::Zeta, -1, vec![q(-1, 1), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn exact_division_with_laurent_shift() {
        // (zeta^2 + zeta) / zeta = zeta + 1
        let a = QPoly::new(Var::Zeta, 1, vec![q(1, 1), q(1, 1)]);
        let b = QPoly::variable(Var::Zeta);
        assert_eq!(
            a.exact_div(&b).unwrap(),
            QPoly::from_int_coeffs(Var::Zeta, &[1, 1])
        );
    }

    #[test]
    fn inexact_division_is_an_error() {
        let a = QPoly::from_int_coeffs(Var::Z, &[1, 0, 1]);
        let b = QPoly::from_int_coeffs(Var::Z, &[1, 1]);
        assert!(a.exact_div(&b).is_err());
    }

    #[test]
    #[should_panic(expected = "mixed-variable")]
    fn mixed_variable_arithmetic_refused() {
        let a = QPoly::variable(Var::Z);
        let b = QPoly::variable(Var::S);
        let _ = &a + &b;
    }

    #[test]
    fn eval_laurent() {
        // zeta^-2 + zeta at zeta = 2 -> 1/4 + 2
        let p = QPoly::new(Var::Zeta, -2, vec![q(1, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(p.eval(&q(2, 1)), q(9, 4));
    }

    #[test]
    fn json_round_trip() {
        let p = QPoly::new(Var::S, 0, vec![q(5, 1), q(4, 1), q(1, 1)]);
        let v = p.to_json();
        assert_eq!(
            v.to_string(),
            r#"{"coeffs":["5","4","1"],"lowest":0,"var":"s"}"#
        );
        assert_eq!(QPoly::from_json(&v).unwrap(), p);
    }
}
