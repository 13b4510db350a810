//! Algebraic Painlevé III (D7) solutions, potentials and Bäcklund
//! transformations, all as exact rational functions of zeta.

use super::gauged_objects::theta_gauged;
use super::rho::rho_recurrence;
use super::Profile;
use crate::rings::{Poly, RationalFunction, Var};
use crate::scalars::{NFScalar, Rational, Scalar};
use crate::Error;

pub type ZetaPoly = Poly<Rational>;
pub type ZetaRatFn = RationalFunction<Rational>;

/// Substitute s = 3 zeta^2 into an s-polynomial.
pub fn rho_at_s3zeta2(rho: &Poly<Rational>) -> ZetaPoly {
    let mut out = ZetaPoly::zero(Var::Zeta);
    for (k, c) in rho.terms() {
        out = &out + &ZetaPoly::monomial(Var::Zeta, 2 * k, c.mul(&Rational::from_int(3).pow(k as u32)));
    }
    out
}

/// z = 2 zeta^3 as a polynomial.
pub fn z_poly() -> ZetaPoly {
    ZetaPoly::monomial(Var::Zeta, 3, Rational::from_int(2))
}

/// P_n = (1/(3 zeta)) rho_{n+1} rho_{n-1} / rho_n^2 for odd n,
///       zeta rho_{n+1} rho_{n-1} / rho_n^2 for even n,
/// with the rho's evaluated at s = 3 zeta^2.
pub fn algebraic_p(n: i64) -> ZetaRatFn {
    let up = rho_at_s3zeta2(&rho_recurrence(n + 1).expect("recurrence route"));
    let down = rho_at_s3zeta2(&rho_recurrence(n - 1).expect("recurrence route"));
    let mid = rho_at_s3zeta2(&rho_recurrence(n).expect("recurrence route"));
    let num = &up * &down;
    let den = &mid * &mid;
    let rf = if n.rem_euclid(2) == 1 {
        RationalFunction::new(num, den.shift(1).scalar_mul(&Rational::from_int(3)))
    } else {
        RationalFunction::new(num.shift(1), den)
    };
    rf.expect("rho_n has no zero at the origin")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VRoute {
    FromP,
    FromTheta,
}

impl VRoute {
    pub fn from_name(s: &str) -> Result<Self, Error> {
        match s {
            "fromP" | "from-p" => Ok(VRoute::FromP),
            "fromTheta" | "from-theta" => Ok(VRoute::FromTheta),
            other => Err(Error::Invalid(format!("unknown potential route {other:?}"))),
        }
    }
}

/// The Schrödinger potential V_n attached to P_n, by either route:
/// from the solution,
///   V = -((P')^2 - 1)/(4P^2) + (P' - 2P^2 + beta)/(2zP),  beta = 2n,
/// or from the Wronskian, V_n = V_0 + 2 (log theta_n)''.
pub fn potential_v(n: i64, route: VRoute) -> Result<ZetaRatFn, Error> {
    match route {
        VRoute::FromP => Ok(v_from_p(&algebraic_p(n), 2 * n)),
        VRoute::FromTheta => v_from_theta(n, Profile::Canonical),
    }
}

pub fn v_from_p(p: &ZetaRatFn, beta: i64) -> ZetaRatFn {
    let d1 = p.d_dz();
    let one = ZetaRatFn::one(Var::Zeta);
    let z = ZetaRatFn::from_poly(z_poly());
    let quarter = Rational::new(1, 4);
    let half = Rational::new(1, 2);
    let p2 = p.mul(p);
    let t1 = d1
        .mul(&d1)
        .sub(&one)
        .div(&p2)
        .expect("P is non-zero")
        .scalar_mul(&quarter)
        .neg();
    let bracket = d1
        .sub(&p2.scalar_mul(&Rational::from_int(2)))
        .add(&ZetaRatFn::constant(Var::Zeta, Rational::from_int(beta)));
    let t2 = bracket
        .div(&z.mul(p))
        .expect("z P is non-zero")
        .scalar_mul(&half);
    t1.add(&t2)
}

pub(crate) fn v_from_theta(n: i64, profile: Profile) -> Result<ZetaRatFn, Error> {
    let theta = theta_gauged(n, profile)?;
    // (log theta)' = gauge part + B'/B = (gamma B + B')/B, a rational
    // function over the number field whose reduced form must be rational.
    let body = theta.body();
    let log_d =
        RationalFunction::new(&(&theta.gauge_log_d_dz() * body) + &body.d_dz(), body.clone())?;
    let v_nf = log_d.d_dz().scalar_mul(&NFScalar::from_int(2));
    let v_corr = RationalFunction::from_nf(&v_nf)?;
    Ok(v0_rational().add(&v_corr))
}

/// V_0 = (5 - 36 zeta^4) / (144 zeta^6) as a rational function.
pub fn v0_rational() -> ZetaRatFn {
    let num = ZetaPoly::new(
        Var::Zeta,
        0,
        vec![
            Rational::new(5, 144),
            Rational::zero(),
            Rational::zero(),
            Rational::zero(),
            Rational::new(-1, 4),
        ],
    );
    RationalFunction::new(num, ZetaPoly::monomial(Var::Zeta, 6, Rational::one()))
        .expect("fixed denominator")
}

/// y_pm = (P' -+ 1) / (2P); the plus sign selects y_+ = (P' - 1)/(2P).
pub fn y_pm(p: &ZetaRatFn, plus: bool) -> ZetaRatFn {
    let shift = if plus {
        ZetaRatFn::one(Var::Zeta).neg()
    } else {
        ZetaRatFn::one(Var::Zeta)
    };
    p.d_dz()
        .add(&shift)
        .div(&p.scalar_mul(&Rational::from_int(2)))
        .expect("P is non-zero")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BtDirection {
    Up,
    Down,
}

/// Bäcklund transformation P -> P_pm = z(-+P' + 1)/(2P^2) + (pm 1 +
/// beta)/(2P), shifting beta by pm 2. The equivalent form P - (z y_pm)'
/// is computed as well and the two are asserted to agree.
pub fn backlund(p: &ZetaRatFn, beta: i64, dir: BtDirection) -> Result<ZetaRatFn, Error> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let plus = matches!(dir, BtDirection::Up);
    let z = ZetaRatFn::from_poly(z_poly());
    let d1 = p.d_dz();
    let sign = if plus { -1 } else { 1 };
    let num = d1
        .scalar_mul(&Rational::from_int(sign))
        .add(&ZetaRatFn::one(Var::Zeta));
    let p2 = p.mul(p).scalar_mul(&Rational::from_int(2));
    let t1 = z.mul(&num).div(&p2)?;
    let shift = Rational::from_int(if plus { 1 + beta } else { -1 + beta });
    let t2 = ZetaRatFn::constant(Var::Zeta, shift)
        .div(&p.scalar_mul(&Rational::from_int(2)))?;
    let direct = t1.add(&t2);
    // Alternative form from the Darboux picture: P - d/dz (z y_pm).
    let y = y_pm(p, plus);
    let alt = p.sub(&z.mul(&y).d_dz());
    if direct != alt {
        return Err(Error::Invalid(
            "Bäcklund forms disagree; the input does not solve Painlevé III (D7)".into(),
        ));
    }
    Ok(direct)
}

/// eta = -P - (z/2) V, the logarithmic derivative of the tau function.
pub fn eta_of(p: &ZetaRatFn, v: &ZetaRatFn) -> ZetaRatFn {
    let z_half = ZetaRatFn::from_poly(ZetaPoly::monomial(Var::Zeta, 3, Rational::one()));
    p.neg().sub(&z_half.mul(v))
}

/// Residual of the Painlevé III (D7) equation
///   P'' - (P')^2/P + P'/z - (2P^2 - beta)/z + 1/P;
/// identically zero iff P solves the equation with parameter beta.
pub fn p3d7_residual(p: &ZetaRatFn, beta: i64) -> ZetaRatFn {
    let z = ZetaRatFn::from_poly(z_poly());
    let d1 = p.d_dz();
    let d2 = d1.d_dz();
    let t1 = d1.mul(&d1).div(p).expect("P non-zero");
    let t2 = d1.div(&z).expect("z non-zero");
    let t3 = p
        .mul(p)
        .scalar_mul(&Rational::from_int(2))
        .sub(&ZetaRatFn::constant(Var::Zeta, Rational::from_int(beta)))
        .div(&z)
        .expect("z non-zero");
    let t4 = ZetaRatFn::one(Var::Zeta).div(p).expect("P non-zero");
    d2.sub(&t1).add(&t2).sub(&t3).add(&t4)
}
