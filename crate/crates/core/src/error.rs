//! Crate-wide error type.

use crate::rings::Var;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// An element of Q[y]/(y^4-3) was required to be rational but has
    /// non-zero radical components (coefficients of y, y^2, y^3).
    #[error("irrational residue: y-components ({0}, {1}, {2}) are non-zero")]
    IrrationalResidue(String, String, String),

    /// A polynomial expected to have integer coefficients does not.
    #[error("non-integer coefficient {coeff} at degree {degree}")]
    NonIntegerCoefficient { degree: i64, coeff: String },

    /// Addition or Wronskian of gauged functions with incompatible gauge
    /// factors.
    #[error("gauge mismatch: {0}")]
    GaugeMismatch(String),

    #[error("variable mismatch: {left} vs {right}")]
    VarMismatch { left: Var, right: Var },

    /// An exact polynomial division left a remainder. In the recurrence
    /// routes this signals an implementation bug, never a tolerable
    /// rounding artefact.
    #[error("inexact division: {0}")]
    InexactDivision(String),

    /// A linear problem that must have a unique polynomial solution
    /// (e.g. the Burchnall-Chaundy step) turned out not to.
    #[error("no polynomial solution: {0}")]
    NoPolynomialSolution(String),

    #[error("missing chain constants: need c_2..c_{needed}, have {have}")]
    MissingConstants { needed: usize, have: usize },

    #[error("argument out of validated range: {0}")]
    OutOfRange(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}
