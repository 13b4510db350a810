//! Exact constructions for special solutions of Painlevé equations.
//!
//! This crate builds, in exact arithmetic, the rational solutions of the
//! Painlevé II equation (through the Yablonskii-Vorob'ev polynomials and
//! their Wronskian representation) and the algebraic solutions of the
//! Painlevé III (D7) equation (through the Ohyama polynomials and their
//! Wronskian representation). Every object is cross-validated through at
//! least two independent routes and by direct substitution into the
//! governing differential equations.
//!
//! The layers are:
//!
//! * [`scalars`] — arbitrary-precision rationals and the quartic number
//!   field Q\[y\]/(y^4 - 3) housing sqrt(3) and 3^(1/4);
//! * [`rings`] — univariate (Laurent) polynomials, rational functions,
//!   gauged functions, differentiation in the physical variable, and
//!   fraction-free Wronskian determinants;
//! * [`adler_moser`] — the KdV/Painlevé II side: Jordan chains,
//!   Burchnall-Chaundy polynomials, Yablonskii-Vorob'ev polynomials and
//!   the rational Painlevé II / XXXIV solutions;
//! * [`ohyama`] — the Painlevé III (D7) side: the coefficient table,
//!   Wronskian entries, the Ohyama polynomials by three routes, algebraic
//!   solutions, Bäcklund transformations and gauged tau functions;
//! * [`genfun`] — Airy-type generating functions for the Jordan-chain
//!   entries and numeric spot checks of the Lax pair.

pub mod adler_moser;
pub mod error;
pub mod genfun;
pub mod ohyama;
pub mod report;
pub mod rings;
pub mod scalars;

pub use error::Error;
pub use report::{CheckResult, Report};
pub use rings::{GaugedFunction, Poly, RationalFunction, Var};
pub use scalars::{NFScalar, Rational, Scalar};
