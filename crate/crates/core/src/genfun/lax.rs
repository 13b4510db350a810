//! Numeric spot checks of the scalar Lax pair over the algebraic seed
//! solution P_0 = zeta, V = V_0:
//!
//!   (1)  Psi_zz + V Psi = lambda Psi,
//!   (2)  Psi_lambda = (1/2)(z/lambda - P/lambda^2) Psi_z
//!                     - (1/4)(1/lambda - P'/lambda^2) Psi,
//!
//! with Psi = lambda^(-1/6) zeta^(1/2) [c1 Ai(u) + c2 Bi(u)],
//! u = (9/lambda^2)^(1/3) (1/4 + lambda zeta^2).
//!
//! Derivatives are 5-point central finite differences; all function
//! values come from the exact-rational Airy evaluator, so the residual is
//! limited only by the O(h^4) truncation of the stencils (~1e-12 at the
//! step sizes used), far below the 1e-8 acceptance tolerance.

use super::airy::{airy_ai_bi, cbrt_rational, nth_root_rational};
use crate::scalars::{Rational, Scalar};
use crate::Error;

const ROOT_BITS: u32 = 280;

/// Relative step 2^-12 for the central differences.
fn fd_step(x: &Rational) -> Rational {
    x.abs().mul(&Rational::from_big(1.into(), num_bigint::BigInt::from(1) << 12))
}

#[derive(Debug, Clone, PartialEq)]
pub struct LaxCheck {
    pub zeta: Rational,
    pub lambda: Rational,
    /// Relative residual of the z equation (Schrödinger part).
    pub residual_schrodinger: f64,
    /// Relative residual of the lambda equation.
    pub residual_lambda_flow: f64,
    pub ok: bool,
}

/// Psi at (zeta, lambda) for branch weights (c1, c2); `sixth_root` selects
/// the correct lambda^(-1/6) prefactor (false substitutes lambda^(-1/3),
/// the deliberate negative control).
fn psi_value(
    zeta: &Rational,
    lambda: &Rational,
    c1: &Rational,
    c2: &Rational,
    sixth_root: bool,
) -> Result<Rational, Error> {
    // u = (9/lambda^2)^(1/3) (1/4 + lambda zeta^2)
    let nine_over_l2 = Rational::from_int(9).div(&lambda.mul(lambda));
    let cbrt = cbrt_rational(&nine_over_l2, ROOT_BITS)?;
    let u = cbrt.mul(&Rational::new(1, 4).add(&lambda.mul(&zeta.mul(zeta))));
    let (ai, bi) = airy_ai_bi(&u)?;
    let lam_pref = if sixth_root {
        // lambda^(-1/6) = 1/sqrt(cbrt(lambda))
        let l13 = cbrt_rational(lambda, ROOT_BITS)?;
        nth_root_rational(&l13, 2, ROOT_BITS)?.inv()
    } else {
        cbrt_rational(lambda, ROOT_BITS)?.inv()
    };
    let sqrt_zeta = nth_root_rational(zeta, 2, ROOT_BITS)?;
    Ok(lam_pref
        .mul(&sqrt_zeta)
        .mul(&c1.mul(&ai).add(&c2.mul(&bi)))
        .round_to_bits(ROOT_BITS))
}

/// 5-point central first derivative: (-f2 + 8 f1 - 8 fm1 + fm2)/(12h).
fn d1_5pt(samples: &[Rational; 5], h: &Rational) -> Rational {
    let eight = Rational::from_int(8);
    let num = samples[4]
        .neg()
        .add(&eight.mul(&samples[3]))
        .sub(&eight.mul(&samples[1]))
        .add(&samples[0]);
    num.div(&Rational::from_int(12).mul(h))
}

/// 5-point central second derivative:
/// (-f2 + 16 f1 - 30 f0 + 16 fm1 - fm2)/(12 h^2).
fn d2_5pt(samples: &[Rational; 5], h: &Rational) -> Rational {
    let sixteen = Rational::from_int(16);
    let num = samples[4]
        .neg()
        .add(&sixteen.mul(&samples[3]))
        .sub(&Rational::from_int(30).mul(&samples[2]))
        .add(&sixteen.mul(&samples[1]))
        .sub(&samples[0]);
    num.div(&Rational::from_int(12).mul(&h.mul(h)))
}

/// Samples f(x + i h) for i = -2..2 where f is Psi as a function of z
/// (lambda fixed) or of lambda (z fixed).
fn sample_z(
    z0: &Rational,
    h: &Rational,
    lambda: &Rational,
    c1: &Rational,
    c2: &Rational,
    sixth_root: bool,
) -> Result<[Rational; 5], Error> {
    let mut out = std::array::from_fn(|_| Rational::zero());
    for (slot, i) in (-2..=2).enumerate() {
        let z = z0.add(&h.mul(&Rational::from_int(i)));
        let zeta = cbrt_rational(&z.mul(&Rational::new(1, 2)), ROOT_BITS)?;
        let v: &mut Rational = &mut out[slot];
        *v = psi_value(&zeta, lambda, c1, c2, sixth_root)?;
    }
    Ok(out)
}

fn sample_lambda(
    zeta: &Rational,
    l0: &Rational,
    h: &Rational,
    c1: &Rational,
    c2: &Rational,
    sixth_root: bool,
) -> Result<[Rational; 5], Error> {
    let mut out = std::array::from_fn(|_| Rational::zero());
    for (slot, i) in (-2..=2).enumerate() {
        let l = l0.add(&h.mul(&Rational::from_int(i)));
        let v: &mut Rational = &mut out[slot];
        *v = psi_value(zeta, &l, c1, c2, sixth_root)?;
    }
    Ok(out)
}

/// Max relative residual of both Lax equations over the two pure branches
/// (c1, c2) = (1, 0) and (0, 1).
pub fn numeric_lax_residuals(
    zeta: &Rational,
    lambda: &Rational,
    sixth_root: bool,
) -> Result<(f64, f64), Error> {
    if !zeta.is_positive() {
        return Err(Error::OutOfRange("zeta must be positive".into()));
    }
    if lambda.is_zero() {
        return Err(Error::OutOfRange("lambda must be non-zero".into()));
    }
    let z0 = Rational::from_int(2).mul(&zeta.mul(zeta).mul(zeta));
    let hz = fd_step(&z0);
    let hl = fd_step(lambda);
    let mut worst = (0.0_f64, 0.0_f64);
    for (c1, c2) in [(1i64, 0i64), (0, 1)] {
        let c1 = Rational::from_int(c1);
        let c2 = Rational::from_int(c2);
        let fz = sample_z(&z0, &hz, lambda, &c1, &c2, sixth_root)?;
        let psi = fz[2].clone();
        let psi_z = d1_5pt(&fz, &hz);
        let psi_zz = d2_5pt(&fz, &hz);
        // V_0(zeta) = (5 - 36 zeta^4)/(144 zeta^6), exactly.
        let z2 = zeta.mul(zeta);
        let z4 = z2.mul(&z2);
        let z6 = z4.mul(&z2);
        let v0 = Rational::from_int(5)
            .sub(&Rational::from_int(36).mul(&z4))
            .div(&Rational::from_int(144).mul(&z6));
        let r1 = psi_zz.add(&v0.mul(&psi)).sub(&lambda.mul(&psi));
        let scale1 = [psi_zz.clone(), v0.mul(&psi), lambda.mul(&psi)]
            .iter()
            .map(|t| t.abs().to_f64())
            .fold(1e-300, f64::max);
        let rel1 = r1.abs().to_f64() / scale1;
        // Lambda-flow equation with P = zeta, P' = 1/(6 zeta^2).
        let fl = sample_lambda(zeta, lambda, &hl, &c1, &c2, sixth_root)?;
        let psi_l = d1_5pt(&fl, &hl);
        let p = zeta.clone();
        let p_prime = Rational::one().div(&Rational::from_int(6).mul(&z2));
        let half = Rational::new(1, 2);
        let quarter = Rational::new(1, 4);
        let coef_z = half.mul(&z0.div(lambda).sub(&p.div(&lambda.mul(lambda))));
        let coef_0 = quarter.mul(
            &Rational::one()
                .div(lambda)
                .sub(&p_prime.div(&lambda.mul(lambda))),
        );
        let r2 = psi_l.sub(&coef_z.mul(&psi_z)).add(&coef_0.mul(&psi));
        let scale2 = [psi_l.clone(), coef_z.mul(&psi_z), coef_0.mul(&psi)]
            .iter()
            .map(|t| t.abs().to_f64())
            .fold(1e-300, f64::max);
        let rel2 = r2.abs().to_f64() / scale2;
        worst.0 = worst.0.max(rel1);
        worst.1 = worst.1.max(rel2);
    }
    Ok(worst)
}

/// Spot check at one grid point against a tolerance.
pub fn numeric_lax_check(zeta: &Rational, lambda: &Rational, tol: f64) -> Result<LaxCheck, Error> {
    let (r1, r2) = numeric_lax_residuals(zeta, lambda, true)?;
    Ok(LaxCheck {
        zeta: zeta.clone(),
        lambda: lambda.clone(),
        residual_schrodinger: r1,
        residual_lambda_flow: r2,
        ok: r1 < tol && r2 < tol,
    })
}
