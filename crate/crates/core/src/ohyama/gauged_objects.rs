//! Gauged eigenfunctions and tau functions.
//!
//! psi_n = zeta^(1/2) exp(-3/2 d zeta^2) W_n  (d = sgn(n)) are the
//! generalized eigenfunctions of the seed potential V_0; their Wronskians
//! theta_n carry the gauge zeta^(|n|/2) exp(-3/2 n zeta^2), and the tau
//! functions sigma_n = sigma_0 theta_n add the fixed gauge
//! zeta^(-5/24) exp(-9/8 zeta^4) of sigma_0.

use super::coeffs::CoeffTable;
use super::Profile;
use crate::rings::{wronskian_gauged, GaugedFunction, Poly, Var};
use crate::scalars::{NFScalar, Rational, Scalar};
use crate::Error;

/// V_0 = (5/144) zeta^-6 - (1/4) zeta^-2 as a Laurent polynomial over the
/// number field, the form used in gauged identities.
pub fn v0_laurent() -> Poly<NFScalar> {
    Poly::new(
        Var::Zeta,
        -6,
        vec![
            NFScalar::from_rational(&Rational::new(5, 144)),
            NFScalar::zero(),
            NFScalar::zero(),
            NFScalar::zero(),
            NFScalar::from_rational(&Rational::new(-1, 4)),
        ],
    )
}

fn entry_w_nf(n: i64, profile: Profile) -> Result<Poly<NFScalar>, Error> {
    match profile {
        Profile::Canonical => CoeffTable::canonical().entry_w(n),
        Profile::Alternate => Ok(CoeffTable::alternate()
            .entry_w(n)?
            .map_coeffs(|c| c.to_nf())),
    }
}

/// psi_n = zeta^(1/2) e^(-3/2 d zeta^2) W_n, a generalized eigenfunction
/// of V_0: psi_n'' + V_0 psi_n = -d a psi_{n-d}. psi_0 = 0.
pub fn gen_eigenfunction_psi(n: i64, profile: Profile) -> Result<GaugedFunction, Error> {
    if n == 0 {
        return Ok(GaugedFunction::zero());
    }
    let delta = n.signum();
    let body = entry_w_nf(n, profile)?;
    Ok(GaugedFunction::with_integer_r(
        1,
        Rational::new(-3 * delta, 2),
        Rational::zero(),
        body,
    ))
}

/// theta_n = Wr(psi_d, ..., psi_n) = zeta^(|n|/2) e^(-3/2 n zeta^2)
/// Wr(W_d, ..., W_n); theta_0 = 1.
pub fn theta_gauged(n: i64, profile: Profile) -> Result<GaugedFunction, Error> {
    if n == 0 {
        return Ok(GaugedFunction::one());
    }
    let delta = n.signum();
    let entries: Vec<GaugedFunction> = (1..=n.abs())
        .map(|j| gen_eigenfunction_psi(delta * j, profile))
        .collect::<Result<_, _>>()?;
    wronskian_gauged(&entries)
}

/// The fixed tau-function gauge sigma_0 = zeta^(-5/24) e^(-9/8 zeta^4):
/// half_power = -5/12, e4 = -9/8.
pub fn sigma_zero() -> GaugedFunction {
    GaugedFunction::new(
        Rational::new(-5, 12),
        Rational::zero(),
        Rational::new(-9, 8),
        Poly::one(Var::Zeta),
    )
}

/// sigma_n = sigma_0 * theta_n.
pub fn sigma_gauged(n: i64, profile: Profile) -> Result<GaugedFunction, Error> {
    Ok(sigma_zero().mul(&theta_gauged(n, profile)?))
}

/// phi_n = theta_{n+1}/theta_n as a (numerator, denominator) pair of
/// gauged functions; the ratio is the eigenfunction of V_n generating the
/// next Darboux step.
pub fn phi_pair(n: i64, profile: Profile) -> Result<(GaugedFunction, GaugedFunction), Error> {
    Ok((theta_gauged(n + 1, profile)?, theta_gauged(n, profile)?))
}

/// (theta_n, sigma_n, phi_n) in one call.
pub fn gauged_objects(
    n: i64,
    profile: Profile,
) -> Result<(GaugedFunction, GaugedFunction, (GaugedFunction, GaugedFunction)), Error> {
    Ok((
        theta_gauged(n, profile)?,
        sigma_gauged(n, profile)?,
        phi_pair(n, profile)?,
    ))
}
