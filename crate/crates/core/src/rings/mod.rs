//! Univariate exact polynomial and rational-function arithmetic.
//!
//! One polynomial type [`Poly`] covers both ordinary and Laurent
//! polynomials (a `lowest` exponent may be negative). Differentiation is
//! always with respect to the physical variable: for `x`/`z`/`s`-tagged
//! polynomials that is the ordinary derivative in the tagged variable,
//! while for `zeta`-tagged objects the chain rule d/dz = (1/(6 zeta^2))
//! d/dzeta is applied, reflecting z = 2 zeta^3.

mod gauged;
mod gcd;
mod poly;
mod rational_fn;
mod wronskian;

pub use gauged::GaugedFunction;
pub use gcd::GcdScalar;
pub use poly::Poly;
pub use rational_fn::RationalFunction;
pub use wronskian::{determinant_bareiss, determinant_cofactor, wronskian, wronskian_gauged};

use std::fmt;

use crate::Error;

/// Variable tag. Arithmetic between differently tagged polynomials is
/// refused; the tag also selects what `d_dz` means.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Z,
    S,
    Zeta,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Z => "z",
            Var::S => "s",
            Var::Zeta => "zeta",
        }
    }

    pub fn from_name(s: &str) -> Result<Self, Error> {
        match s {
            "x" => Ok(Var::X),
            "z" => Ok(Var::Z),
            "s" => Ok(Var::S),
            "zeta" => Ok(Var::Zeta),
            other => Err(Error::Invalid(format!("unknown variable tag {other:?}"))),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
