//! The quartic number field Q[y]/(y^4 - 3).
//!
//! An element is r0 + r1*y + r2*y^2 + r3*y^3 with rational coefficients,
//! where y stands for 3^(1/4), so y^2 is sqrt(3) and y^4 reduces to 3.
//! The polynomial y^4 - 3 is irreducible over Q (Eisenstein at 3), so
//! this is a field; inverses are computed through the quadratic subfield
//! Q(sqrt(3)).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Scalar};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NFScalar {
    /// Coefficients of 1, y, y^2, y^3.
    coeffs: [Rational; 4],
}

impl NFScalar {
    pub fn new(coeffs: [Rational; 4]) -> Self {
        NFScalar { coeffs }
    }

    pub fn from_parts(r0: Rational, r1: Rational, r2: Rational, r3: Rational) -> Self {
        NFScalar {
            coeffs: [r0, r1, r2, r3],
        }
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.coeffs
    }

    /// 3^(1/4), the generator y.
    pub fn root4_of_3() -> Self {
        NFScalar::from_parts(
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    /// sqrt(3) = y^2.
    pub fn sqrt3() -> Self {
        NFScalar::from_parts(
            Rational::zero(),
            Rational::zero(),
            Rational::one(),
            Rational::zero(),
        )
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero() && self.coeffs[3].is_zero()
    }

    /// Multiplicative inverse. Goes through the subfield Q(sqrt(3)):
    /// write x = A + B y with A, B in Q(sqrt(3)); then
    /// x (A - B y) = A^2 - B^2 y^2 lies in Q(sqrt(3)), and a final
    /// conjugation lands in Q.
    pub fn inv(&self) -> Self {
        assert!(!Scalar::is_zero(self), "NFScalar inverse of zero");
        let [a0, a1, a2, a3] = &self.coeffs;
        // u + v*sqrt(3) := A^2 - 3 B^2 ... with A = a0 + a2 w, B = a1 + a3 w,
        // w = sqrt(3): A^2 - w B^2.
        let three = Rational::from_int(3);
        let six = Rational::from_int(6);
        let two = Rational::from_int(2);
        let u = &(&(a0 * a0) + &(&three * &(a2 * a2))) - &(&six * &(a1 * a3));
        let v = &(&two * &(a0 * a2)) - &(&(a1 * a1) + &(&three * &(a3 * a3)));
        // Norm to Q: (u + v w)(u - v w) = u^2 - 3 v^2.
        let norm = &(&u * &u) - &(&three * &(&v * &v));
        assert!(!norm.is_zero(), "NFScalar norm vanished for non-zero element");
        // inv = (A - B y) * (u - v y^2) / norm.
        let a_minus_by = NFScalar::from_parts(
            a0.clone(),
            Scalar::neg(a1),
            a2.clone(),
            Scalar::neg(a3),
        );
        let conj = NFScalar::from_parts(u, Rational::zero(), Scalar::neg(&v), Rational::zero());
        let mut out = Scalar::mul(&a_minus_by, &conj);
        for c in out.coeffs.iter_mut() {
            *c = Scalar::div(c, &norm);
        }
        debug_assert!(Scalar::mul(&out, self) == Scalar::one());
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        NFScalar {
            coeffs: [
                &self.coeffs[0] * r,
                &self.coeffs[1] * r,
                &self.coeffs[2] * r,
                &self.coeffs[3] * r,
            ],
        }
    }
}

impl Scalar for NFScalar {
    fn zero() -> Self {
        NFScalar::from_parts(
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    fn one() -> Self {
        NFScalar::from_parts(
            Rational::one(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        )
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn from_rational(r: &Rational) -> Self {
        NFScalar::from_parts(r.clone(), Rational::zero(), Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn add(&self, rhs: &Self) -> Self {
        NFScalar {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &rhs.coeffs[i]),
        }
    }

    fn sub(&self, rhs: &Self) -> Self {
        NFScalar {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &rhs.coeffs[i]),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        // Convolve, then reduce y^(4+i) -> 3 y^i.
        let mut full = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                full[i + j] = &full[i + j] + &(a * b);
            }
        }
        let three = Rational::from_int(3);
        NFScalar {
            coeffs: std::array::from_fn(|i| {
                if i + 4 <= 6 {
                    &full[i] + &(&three * &full[i + 4])
                } else {
                    full[i].clone()
                }
            }),
        }
    }

    fn neg(&self) -> Self {
        NFScalar {
            coeffs: std::array::from_fn(|i| Scalar::neg(&self.coeffs[i])),
        }
    }

    fn div(&self, rhs: &Self) -> Self {
        Scalar::mul(self, &rhs.inv())
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        if Scalar::is_zero(rhs) {
            Err(Error::DivisionByZero)
        } else {
            Ok(Scalar::div(self, rhs))
        }
    }

    fn to_rational(&self) -> Result<Rational, Error> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::IrrationalResidue(
                self.coeffs[1].to_string(),
                self.coeffs[2].to_string(),
                self.coeffs[3].to_string(),
            ))
        }
    }

    fn to_nf(&self) -> NFScalar {
        self.clone()
    }

    fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    fn from_json(v: &serde_json::Value) -> Result<Self, Error> {
        let arr = v
            .as_array()
            .filter(|a| a.len() == 4)
            .ok_or_else(|| Error::Invalid(format!("expected 4-array for NFScalar, got {v}")))?;
        let mut coeffs = [
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
        ];
        for (i, item) in arr.iter().enumerate() {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Invalid(format!("expected string in NFScalar, got {item}")))?;
            coeffs[i] = s.parse()?;
        }
        Ok(NFScalar { coeffs })
    }
}

impl fmt::Display for NFScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Scalar::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "y")?;
                    } else {
                        write!(f, "y^{i}")?;
                    }
                }
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for NFScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! impl_nf_ops {
    ($trait:ident, $method:ident) => {
        impl $trait<&NFScalar> for &NFScalar {
            type Output = NFScalar;
            fn $method(self, rhs: &NFScalar) -> NFScalar {
                Scalar::$method(self, rhs)
            }
        }
        impl $trait for NFScalar {
            type Output = NFScalar;
            fn $method(self, rhs: NFScalar) -> NFScalar {
                Scalar::$method(&self, &rhs)
            }
        }
    };
}

impl_nf_ops!(Add, add);
impl_nf_ops!(Sub, sub);
impl_nf_ops!(Mul, mul);

impl Neg for &NFScalar {
    type Output = NFScalar;
    fn neg(self) -> NFScalar {
        Scalar::neg(self)
    }
}
