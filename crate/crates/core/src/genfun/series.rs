//! Exact lambda-expansion of the generating functions.
//!
//! With xi = (1 + 4 lambda zeta^2)^(3/2) / (4 lambda), the generating
//! function of the chain with sign d = ±1 factors as
//!
//!   3^(1/4) zeta^(1/2) e^(-3/2 d zeta^2)
//!     * (1 + 4 lambda zeta^2)^(-1/4)
//!     * exp(-d G)
//!     * (1 + sum_{k>=1} (-d)^k u_k (4 lambda)^k (1+4 lambda zeta^2)^(-3k/2)),
//!
//! where G = ((1+4 lambda zeta^2)^(3/2) - 1 - 6 lambda zeta^2)/(4 lambda)
//! collects the lambda-dependent part of the exponent. Every factor is a
//! lambda-series whose coefficients are polynomials in zeta^2 over Q, so
//! the composition is exact.

use super::airy::airy_u;
use crate::ohyama::{gen_eigenfunction_psi, v0_laurent, Profile};
use crate::report::Report;
use crate::rings::{GaugedFunction, Poly, Var};
use crate::scalars::{NFScalar, Rational, Scalar};
use crate::Error;

type QPoly = Poly<Rational>;
type Series = Vec<QPoly>;

/// Truncated lambda-series of gauged coefficients generating the Jordan
/// chain of sign `delta`.
#[derive(Debug, Clone)]
pub struct LambdaSeries {
    pub delta: i64,
    pub order: usize,
    pub coefficients: Vec<GaugedFunction>,
}

fn binomial(alpha: &Rational, j: usize) -> Rational {
    let mut acc = Rational::one();
    for i in 0..j {
        acc = acc
            .mul(&alpha.sub(&Rational::from_int(i as i64)))
            .div(&Rational::from_int(i as i64 + 1));
    }
    acc
}

fn series_mul(a: &Series, b: &Series, order: usize) -> Series {
    let mut out = vec![QPoly::zero(Var::Zeta); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if bj.is_zero() {
                continue;
            }
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// exp of a series with zero constant term, via j E_j = sum i T_i E_{j-i}.
fn series_exp(t: &Series, order: usize) -> Series {
    assert!(t[0].is_zero(), "exponent series must vanish at lambda = 0");
    let mut e = vec![QPoly::zero(Var::Zeta); order + 1];
    e[0] = QPoly::one(Var::Zeta);
    for j in 1..=order {
        let mut acc = QPoly::zero(Var::Zeta);
        for i in 1..=j {
            if t[i].is_zero() {
                continue;
            }
            acc = &acc + &(&t[i] * &e[j - i]).scalar_mul(&Rational::from_int(i as i64));
        }
        e[j] = acc.scalar_mul(&Rational::new(1, j as i64));
    }
    e
}

/// (1 + 4 lambda zeta^2)^alpha as a lambda-series.
fn binomial_series(alpha: &Rational, order: usize) -> Series {
    (0..=order)
        .map(|j| {
            QPoly::monomial(
                Var::Zeta,
                2 * j as i64,
                binomial(alpha, j).mul(&Rational::from_int(4).pow(j as u32)),
            )
        })
        .collect()
}

/// Coefficients of lambda^j in the generating function for the chain of
/// sign `delta`, as gauged functions with gauge zeta^(1/2)
/// e^(-3/2 delta zeta^2).
pub fn expand_generating(delta: i64, order: usize) -> Result<LambdaSeries, Error> {
    if delta != 1 && delta != -1 {
        return Err(Error::Invalid(format!("delta must be ±1, got {delta}")));
    }
    // G_j = (1/4) binom(3/2, j+1) (4 zeta^2)^(j+1) for j >= 1.
    let mut g = vec![QPoly::zero(Var::Zeta); order + 1];
    let three_half = Rational::new(3, 2);
    for (j, slot) in g.iter_mut().enumerate().skip(1) {
        let c = binomial(&three_half, j + 1)
            .mul(&Rational::from_int(4).pow(j as u32 + 1))
            .mul(&Rational::new(1, 4));
        *slot = QPoly::monomial(Var::Zeta, 2 * (j as i64 + 1), c);
    }
    if delta == 1 {
        for slot in g.iter_mut() {
            *slot = slot.neg();
        }
    }
    let exp_part = series_exp(&g, order);
    let bin_part = binomial_series(&Rational::new(-1, 4), order);
    // Asymptotic tail: 1 + sum_k (-delta)^k u_k (4 lambda)^k (1+4 l z^2)^(-3k/2).
    let mut tail = vec![QPoly::zero(Var::Zeta); order + 1];
    tail[0] = QPoly::one(Var::Zeta);
    for k in 1..=order {
        let scale = airy_u(k)
            .mul(&Rational::from_int(4).pow(k as u32))
            .mul(&Rational::from_int(if (k % 2 == 1) && delta == 1 { -1 } else { 1 }));
        let factor = binomial_series(&Rational::new(-3 * k as i64, 2), order - k);
        for (j, f) in factor.iter().enumerate() {
            tail[k + j] = &tail[k + j] + &f.scalar_mul(&scale);
        }
    }
    let product = series_mul(&series_mul(&exp_part, &bin_part, order), &tail, order);
    let root4 = NFScalar::root4_of_3();
    let coefficients = product
        .iter()
        .map(|p| {
            GaugedFunction::with_integer_r(
                1,
                Rational::new(-3 * delta, 2),
                Rational::zero(),
                p.map_coeffs(|c| root4.scale(c)),
            )
        })
        .collect();
    Ok(LambdaSeries {
        delta,
        order,
        coefficients,
    })
}

/// Rescale the module-side eigenfunction psi_{delta (j+1)} to the chain
/// normalization of the generating function (a = -1): multiply by
/// (-delta sqrt(3))^(-j).
fn rescaled_psi(delta: i64, j: usize) -> Result<GaugedFunction, Error> {
    let psi = gen_eigenfunction_psi(delta * (j as i64 + 1), Profile::Canonical)?;
    let inv_sqrt3 = NFScalar::sqrt3().inv();
    let mut scale = inv_sqrt3.pow(j as u32);
    if delta == 1 && j % 2 == 1 {
        scale = scale.neg();
    }
    Ok(psi.scalar_mul(&scale))
}

/// Verify the expansion term by term:
/// * `series_chain`: coefficient j solves psi'' + V_0 psi = psi_{j-1}
///   (the a = -1 normalization of the Jordan chain);
/// * `series_matches_psi`: coefficient j equals the rescaled Wronskian
///   entry psi_{delta(j+1)} plus a rational linear combination of lower
///   chain members, found exactly by triangular elimination.
pub fn verify_series_chain(series: &LambdaSeries, order: usize) -> Result<Report, Error> {
    assert!(order >= 1 && order <= series.order);
    let mut report = Report::new();
    let v0 = v0_laurent();
    for j in 1..=order {
        let cur = &series.coefficients[j];
        let prev = &series.coefficients[j - 1];
        let lhs = cur.d_dz().d_dz().add(&cur.mul_body(&v0))?.sub(prev)?;
        report.push("series_chain", j as i64, lhs.is_zero());
    }
    for j in 0..=order {
        let ok = decompose_against_chain(series, j).is_ok();
        report.push("series_matches_psi", j as i64, ok);
    }
    Ok(report)
}

/// Write coefficient j as sum_{i<=j} x_i * rescaled_psi(i) and return the
/// combination; errors if the decomposition fails or x_j != 1.
pub fn decompose_against_chain(
    series: &LambdaSeries,
    j: usize,
) -> Result<Vec<Rational>, Error> {
    let mut remainder = series.coefficients[j].clone();
    let mut coeffs = vec![Rational::zero(); j + 1];
    for i in (0..=j).rev() {
        let basis = rescaled_psi(series.delta, i)?;
        // Bodies are polynomials in zeta^2 of strictly increasing degree
        // 4i; eliminate from the top.
        let top = 4 * i as i64;
        let num = remainder.body().coeff(top);
        if num.is_zero() {
            continue;
        }
        let den = basis.body().coeff(top);
        let x = num.div(&den);
        remainder = remainder.sub(&basis.scalar_mul(&x))?;
        coeffs[i] = x.to_rational()?;
    }
    if !remainder.is_zero() {
        return Err(Error::NoPolynomialSolution(format!(
            "coefficient {j} is not in the span of the chain"
        )));
    }
    if coeffs[j] != Rational::one() {
        return Err(Error::Invalid(format!(
            "leading chain coefficient is {} (expected 1)",
            coeffs[j]
        )));
    }
    Ok(coeffs)
}
