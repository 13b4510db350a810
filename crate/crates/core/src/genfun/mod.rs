//! Airy-type generating functions for the Jordan-chain entries.
//!
//! The wave function solving the z part of the Painlevé III (D7) Lax pair
//! over the seed solution expands, as lambda -> 0, into the generalized
//! eigenfunctions of V_0: one branch (built on Ai) generates the positive
//! chain, the other (built on Bi) the negative chain. The expansion is
//! carried out exactly through the standard Airy asymptotic series, whose
//! rational coefficients u_k obey
//!
//!   u_k = (6k-5)(6k-3)(6k-1) / (216 k (2k-1)) u_{k-1},  u_0 = 1.
//!
//! A numeric evaluator (exact-rational Maclaurin summation of Ai/Bi) spot
//! checks both Lax equations at concrete points by high-order central
//! finite differences.

mod airy;
mod lax;
mod series;

pub use airy::{airy_ai_bi, airy_u, cbrt_rational, nth_root_rational};
pub use lax::{numeric_lax_check, numeric_lax_residuals, LaxCheck};
pub use series::{decompose_against_chain, expand_generating, verify_series_chain, LambdaSeries};
