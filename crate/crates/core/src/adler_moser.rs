//! The KdV / Painlevé II side.
//!
//! An Adler-Moser chain is the Jordan chain of generalized eigenfunctions
//! psi_k for the zero potential at zero eigenvalue, with arbitrary
//! constants c_2, c_3, ... The Wronskians theta_k = Wr(psi_1, ..., psi_k)
//! satisfy the Burchnall-Chaundy relation
//!
//!   theta_{k+1}' theta_{k-1} - theta_{k+1} theta_{k-1}' = theta_k^2,
//!
//! and the specialization c_2 -> -4/3, c_i -> 0 (i > 2), x -> z produces
//! the Yablonskii-Vorob'ev polynomials, the polynomial tau functions of
//! the rational Painlevé II solutions. The same polynomials arise as
//! Wronskians of odd-index elementary Schur polynomials, which is the
//! second, independent route used for cross-validation.

use crate::report::Report;
use crate::rings::{wronskian, Poly, RationalFunction, Var};
use crate::scalars::{Rational, Scalar};
use crate::Error;

pub type QPoly = Poly<Rational>;
pub type QRatFn = RationalFunction<Rational>;

/// Factorial as a rational (sizes here stay tiny).
fn factorial(n: i64) -> Rational {
    let mut acc = Rational::one();
    for i in 2..=n {
        acc = &acc * &Rational::from_int(i);
    }
    acc
}

/// Jordan chain for the zero potential with constants c_2..c_m and the
/// Wronskians theta_k, cached as they are built.
pub struct AMChain {
    /// constants[i] is c_{i+2}.
    constants: Vec<Rational>,
    psis: Vec<QPoly>,
    thetas: Vec<QPoly>,
}

impl AMChain {
    pub fn new(constants: Vec<Rational>) -> Self {
        AMChain {
            constants,
            psis: Vec::new(),
            thetas: Vec::new(),
        }
    }

    /// The Yablonskii-Vorob'ev chain: constants pinned so that the
    /// Wronskians are tau polynomials of the rational Painlevé II
    /// solutions.
    ///
    /// Each new constant c_k enters theta_k linearly (it is the constant
    /// slot of psi_k), and is fixed by requiring the bilinear Toda
    /// relation
    ///   -(k - 1/2) theta_{k-2} theta_k
    ///     = 2 (theta_{k-1} theta_{k-1}'' - (theta_{k-1}')^2
    ///          - (x/4) theta_{k-1}^2)
    /// to hold, which is the similarity-reduction condition on the KdV
    /// potentials. This derives c_2 = -4/3 and c_3 = c_4 = 0, but the
    /// higher constants of weight divisible by 3 are non-zero (c_5 =
    /// 64/81, ...): the naive substitution c_i = 0 for i > 2 leaves the
    /// tau manifold at k = 5.
    pub fn yablonskii_vorobev(max_k: usize) -> Self {
        let mut chain = AMChain::new(Vec::new());
        for k in 2..=max_k.max(2) {
            let c_k = chain.pin_constant(k).expect("Toda pinning is exact");
            chain.constants.push(c_k);
            // Invalidate entries that were built with the trial constant.
            chain.psis.truncate(k - 1);
            chain.thetas.truncate(k - 1);
        }
        chain
    }

    /// Solve for c_k from the Toda relation at index k-1, given that
    /// c_2..c_{k-1} are already pinned.
    fn pin_constant(&mut self, k: usize) -> Result<Rational, Error> {
        // Temporarily extend with c_k = 0 and build theta_k(0) = A; the
        // true theta_k is A + c_k B with B = Wr(psi_1..psi_{k-1}, 1).
        self.constants.push(Rational::zero());
        let a = self.theta(k as i64)?;
        let mut entries: Vec<QPoly> = Vec::with_capacity(k);
        for j in 1..k {
            entries.push(self.psi(j)?);
        }
        entries.push(QPoly::one(Var::X));
        let b = wronskian(Var::X, &entries)?;
        // Target from the Toda step.
        let mid = self.theta(k as i64 - 1)?;
        let prev = self.theta(k as i64 - 2)?;
        let d1 = mid.d_dz();
        let d2 = d1.d_dz();
        let x4 = QPoly::monomial(Var::X, 1, Rational::new(1, 4));
        let rhs = (&(&(&mid * &d2) - &(&d1 * &d1)) - &(&x4 * &(&mid * &mid)))
            .scalar_mul(&Rational::from_int(2));
        let ell = &Rational::from_int(k as i64) - &Rational::new(1, 2);
        let target = rhs
            .scalar_div(&Scalar::neg(&ell))
            .exact_div(&prev)
            .map_err(|_| {
                Error::InexactDivision(format!(
                    "Toda pinning at k={k}: theta_{} does not divide",
                    k - 2
                ))
            })?;
        let quotient = (&target - &a).exact_div(&b)?;
        self.constants.pop();
        match quotient.as_constant() {
            Some(c) => Ok(c),
            None => Err(Error::NoPolynomialSolution(format!(
                "Toda pinning at k={k}: non-constant quotient {quotient}"
            ))),
        }
    }

    pub fn constant(&self, i: usize) -> Rational {
        assert!(i >= 2, "chain constants start at c_2");
        self.constants
            .get(i - 2)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// psi_k = x^(2k-1)/(2k-1)! + sum_{i=0}^{k-2} c_{k-i} x^(2i)/(2i)!.
    pub fn psi(&mut self, k: usize) -> Result<QPoly, Error> {
        assert!(k >= 1, "psi index starts at 1");
        if k >= 2 && self.constants.len() < k - 1 {
            return Err(Error::MissingConstants {
                needed: k,
                have: self.constants.len() + 1,
            });
        }
        if let Some(p) = self.psis.get(k - 1) {
            return Ok(p.clone());
        }
        for j in self.psis.len() + 1..=k {
            let mut p = QPoly::monomial(
                Var::X,
                (2 * j - 1) as i64,
                Rational::one().div(&factorial(2 * j as i64 - 1)),
            );
            if j >= 2 {
                for i in 0..=j - 2 {
                    let c = self.constant(j - i);
                    if c.is_zero() {
                        continue;
                    }
                    p = &p
                        + &QPoly::monomial(Var::X, 2 * i as i64, c.div(&factorial(2 * i as i64)));
                }
            }
            self.psis.push(p);
        }
        Ok(self.psis[k - 1].clone())
    }

    /// theta_k = Wr(psi_1, ..., psi_k); theta_0 = theta_{-1} = 1.
    pub fn theta(&mut self, k: i64) -> Result<QPoly, Error> {
        if k <= 0 {
            assert!(k >= -1, "theta defined for k >= -1");
            return Ok(QPoly::one(Var::X));
        }
        let k = k as usize;
        if let Some(t) = self.thetas.get(k - 1) {
            return Ok(t.clone());
        }
        self.psi(k)?;
        for j in self.thetas.len() + 1..=k {
            let entries = self.psis[..j].to_vec();
            self.thetas.push(wronskian(Var::X, &entries)?);
        }
        Ok(self.thetas[k - 1].clone())
    }
}

/// Closed-form Jordan chain member (see [`AMChain::psi`]).
pub fn am_psi(k: usize, chain: &mut AMChain) -> Result<QPoly, Error> {
    chain.psi(k)
}

/// Burchnall-Chaundy polynomial theta_k (see [`AMChain::theta`]).
pub fn am_theta(k: i64, chain: &mut AMChain) -> Result<QPoly, Error> {
    chain.theta(k)
}

/// Rational KdV potential V_k = 2 (log theta_k)''.
pub fn kdv_potential(k: i64, chain: &mut AMChain) -> Result<QRatFn, Error> {
    let theta = chain.theta(k)?;
    log_second_derivative(&theta)
}

/// 2 (log p)'' = 2 (p'' p - (p')^2) / p^2 in the polynomial's own variable.
fn log_second_derivative(p: &QPoly) -> Result<QRatFn, Error> {
    let d1 = p.d_dz();
    let d2 = d1.d_dz();
    let num = (&(&d2 * p) - &(&d1 * &d1)).scalar_mul(&Rational::from_int(2));
    RationalFunction::new(num, p * p)
}

/// Yablonskii-Vorob'ev polynomial: theta_n under c_2 -> -4/3, c_i -> 0,
/// x -> z. Carries the conventional rational prefactor (e.g. (z^3+4)/3).
pub fn yv_polynomial(n: i64) -> QPoly {
    assert!(n >= 0, "Yablonskii-Vorob'ev index must be non-negative");
    let mut chain = AMChain::yablonskii_vorobev(n.max(1) as usize);
    chain
        .theta(n)
        .expect("YV chain has all constants")
        .with_var(Var::Z)
}

/// Elementary Schur polynomial p_k: the coefficient of lambda^k in
/// exp(z lambda - (4/3) lambda^3); zero for k < 0.
pub fn schur_p(k: i64) -> QPoly {
    if k < 0 {
        return QPoly::zero(Var::Z);
    }
    // exp(z l) exp(-4/3 l^3): coefficient of l^k is
    // sum_{3j <= k} (-4/3)^j / j! * z^(k-3j) / (k-3j)!.
    let mut p = QPoly::zero(Var::Z);
    let m43 = Rational::new(-4, 3);
    let mut j = 0;
    while 3 * j <= k {
        let c = m43
            .pow(j as u32)
            .div(&factorial(j))
            .div(&factorial(k - 3 * j));
        p = &p + &QPoly::monomial(Var::Z, k - 3 * j, c);
        j += 1;
    }
    p
}

/// Polynomial part of the Kajiwara-Ohta tau function:
/// Wr(p_1, p_3, ..., p_{2n-1}) in z. Equals yv_polynomial(n) exactly.
pub fn ko_tau(n: i64) -> QPoly {
    assert!(n >= 0, "tau index must be non-negative");
    let entries: Vec<QPoly> = (0..n).map(|i| schur_p(2 * i + 1)).collect();
    wronskian(Var::Z, &entries).expect("same-variable entries")
}

/// A rational Painlevé II solution at integer parameter alpha.
#[derive(Debug, Clone)]
pub struct PiiSolution {
    /// ell = alpha + 1/2.
    pub ell: Rational,
    pub q: QRatFn,
    pub p: QRatFn,
    pub tau_poly: QPoly,
}

/// Rational solution q of Painlevé II with parameter alpha, as the
/// logarithmic derivative of a ratio of adjacent tau polynomials, with
/// the conjugate momentum p from the Miura formula p = -q' - q^2 - z/2.
pub fn pii_rational(alpha: i64) -> PiiSolution {
    let n = alpha.abs();
    let ell = &Rational::from_int(alpha) + &Rational::new(1, 2);
    // q_n = d/dz log(Y_{n-1}/Y_n); q_{-n} = -q_n; Y_{-1} = Y_0 = 1.
    let prev = if n == 0 { QPoly::one(Var::Z) } else { yv_polynomial(n - 1) };
    let cur = yv_polynomial(n);
    let mut q = log_derivative(&prev)
        .sub(&log_derivative(&cur));
    if alpha < 0 {
        q = q.neg();
    }
    let p = miura(&q);
    // tau index |ell| - 1/2: for alpha >= 0 that is Y_alpha, for alpha < 0
    // it is Y_{-alpha-1} since tau_{-ell} = tau_ell.
    let tau_poly = if alpha >= 0 { cur } else { yv_polynomial(-alpha - 1) };
    PiiSolution { ell, q, p, tau_poly }
}

fn log_derivative(p: &QPoly) -> QRatFn {
    RationalFunction::new(p.d_dz(), p.clone()).expect("non-zero tau polynomial")
}

/// Miura map: p = -q' - q^2 - z/2 solves Painlevé XXXIV when q solves
/// Painlevé II.
pub fn miura(q: &QRatFn) -> QRatFn {
    let z_half = QRatFn::from_poly(QPoly::monomial(Var::Z, 1, Rational::new(1, 2)));
    q.d_dz().neg().sub(&q.mul(q)).sub(&z_half)
}

/// Painlevé XXXIV solution p_ell = 2 (log tau_ell)'' for ell = n + 1/2;
/// the exponential prefactor exp(-z^3/24) of the tau function contributes
/// the -z/2 term analytically.
pub fn p34_solution(ell: &Rational) -> Result<QRatFn, Error> {
    let n2 = &(&Rational::from_int(2) * ell) - &Rational::one();
    if !n2.is_integer() || n2.is_negative() || n2.numer() % 2 != num_bigint::BigInt::from(0) {
        return Err(Error::Invalid(format!(
            "Painlevé XXXIV index must be n + 1/2 with integer n >= 0, got {ell}"
        )));
    }
    let n = i64::try_from(n2.numer() / 2).map_err(|_| Error::Invalid("index too large".into()))?;
    let y = yv_polynomial(n);
    let z_half = QRatFn::from_poly(QPoly::monomial(Var::Z, 1, Rational::new(1, 2)));
    Ok(log_second_derivative(&y)?.sub(&z_half))
}

/// Residual of Painlevé II: q'' - 2 q^3 - z q - alpha; zero iff q solves
/// the equation with parameter alpha.
pub fn pii_residual(q: &QRatFn, alpha: &Rational) -> QRatFn {
    let z = QRatFn::variable(Var::Z);
    let two = Rational::from_int(2);
    q.d_dz()
        .d_dz()
        .sub(&q.pow(3).scalar_mul(&two))
        .sub(&z.mul(q))
        .sub(&QRatFn::constant(Var::Z, alpha.clone()))
}

/// Residual of Painlevé XXXIV, cleared of denominators:
/// 2 p p'' - (p')^2 + 4 p^3 + 2 z p^2 + ell^2.
pub fn p34_residual(p: &QRatFn, ell: &Rational) -> QRatFn {
    let z = QRatFn::variable(Var::Z);
    let two = Rational::from_int(2);
    let four = Rational::from_int(4);
    let d1 = p.d_dz();
    let d2 = d1.d_dz();
    p.mul(&d2)
        .scalar_mul(&two)
        .sub(&d1.mul(&d1))
        .add(&p.pow(3).scalar_mul(&four))
        .add(&z.mul(&p.mul(p)).scalar_mul(&two))
        .add(&QRatFn::constant(Var::Z, ell.mul(ell)))
}

/// Burchnall-Chaundy check theta_{k+1}' theta_{k-1} - theta_{k+1}
/// theta_{k-1}' = theta_k^2.
pub fn check_bc(prev: &QPoly, mid: &QPoly, next: &QPoly) -> bool {
    let lhs = &(&next.d_dz() * prev) - &(next * &prev.d_dz());
    lhs == mid * mid
}

/// Toda check on the Yablonskii-Vorob'ev tau functions, with the
/// exponential prefactor folded in analytically:
/// -(n + 1/2) Y_{n-1} Y_{n+1} = 2 (Y_n Y_n'' - (Y_n')^2 - (z/4) Y_n^2).
pub fn check_yv_toda(n: i64, prev: &QPoly, mid: &QPoly, next: &QPoly) -> bool {
    let ell = &Rational::from_int(n) + &Rational::new(1, 2);
    let lhs = (prev * next).scalar_mul(&Scalar::neg(&ell));
    let d1 = mid.d_dz();
    let d2 = d1.d_dz();
    let z_quarter = QPoly::monomial(Var::Z, 1, Rational::new(1, 4));
    let rhs = (&(&(mid * &d2) - &(&d1 * &d1)) - &(&z_quarter * &(mid * mid)))
        .scalar_mul(&Rational::from_int(2));
    lhs == rhs
}

/// Exact verification of the chain identities and the ODEs.
///
/// Checks, per index: the Burchnall-Chaundy relation on the supplied
/// chain; on the Yablonskii-Vorob'ev specialization the same relation
/// (which is the paper's modified form with -(n+1/2) C_{n+1/2} = 1) and
/// the bilinear Toda relation; and direct substitution of the Painlevé II
/// and XXXIV solutions into their equations.
pub fn verify_am_identities(k_max: i64, chain: &mut AMChain) -> Result<Report, Error> {
    let mut report = Report::new();
    // Jordan chain: psi_k'' = psi_{k-1}.
    for k in 2..=k_max.max(1) {
        let pk = chain.psi(k as usize)?;
        let pk1 = chain.psi(k as usize - 1)?;
        report.push("am_psi_chain", k, pk.d_dz().d_dz() == pk1);
    }
    // Burchnall-Chaundy on the supplied chain.
    for k in 1..=k_max {
        let prev = chain.theta(k - 1)?;
        let mid = chain.theta(k)?;
        let next = chain.theta(k + 1)?;
        report.push("am_theta_bc", k, check_bc(&prev, &mid, &next));
    }
    // Yablonskii-Vorob'ev specialization.
    let mut yv: Vec<QPoly> = Vec::new();
    for n in 0..=(k_max + 1) {
        yv.push(yv_polynomial(n));
    }
    let one = QPoly::one(Var::Z);
    for n in 0..=k_max {
        let prev = if n == 0 { &one } else { &yv[n as usize - 1] };
        report.push(
            "yv_bcmod",
            n,
            check_bc(prev, &yv[n as usize], &yv[n as usize + 1]),
        );
        report.push(
            "yv_toda",
            n,
            check_yv_toda(n, prev, &yv[n as usize], &yv[n as usize + 1]),
        );
    }
    // ODE substitutions.
    for alpha in 0..=k_max {
        let sol = pii_rational(alpha);
        report.push(
            "pii_ode",
            alpha,
            pii_residual(&sol.q, &Rational::from_int(alpha)).is_zero(),
        );
        report.push(
            "p34_miura_ode",
            alpha,
            p34_residual(&sol.p, &sol.ell).is_zero(),
        );
    }
    for n in 0..=k_max {
        let ell = &Rational::from_int(n) + &Rational::new(1, 2);
        let p = p34_solution(&ell)?;
        report.push("p34_ode", n, p34_residual(&p, &ell).is_zero());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn chain_with(constants: &[(i64, i64)]) -> AMChain {
        AMChain::new(constants.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn psi_1_is_x() {
        let mut chain = chain_with(&[]);
        assert_eq!(chain.psi(1).unwrap(), QPoly::variable(Var::X));
    }

    #[test]
    fn psi_2_is_cubic_plus_constant() {
        // psi_2 = x^3/6 + c2
        let mut chain = chain_with(&[(7, 2)]);
        let expected = QPoly::new(Var::X, 0, vec![q(7, 2), q(0, 1), q(0, 1), q(1, 6)]);
        assert_eq!(chain.psi(2).unwrap(), expected);
    }

    #[test]
    fn psi_3_from_double_integration_oracle() {
        // Integrate psi_3'' = psi_2 twice, dropping the odd constant and
        // psi_1 multiples: x^5/120 + c2 x^2/2 + c3.
        let c2 = q(7, 2);
        let c3 = q(-5, 3);
        let mut chain = AMChain::new(vec![c2.clone(), c3.clone()]);
        let psi2 = chain.psi(2).unwrap();
        let integrated = integrate_twice_even(&psi2, &c3);
        assert_eq!(chain.psi(3).unwrap(), integrated);
    }

    /// Test oracle: integrate twice, adding only the even-power constant.
    fn integrate_twice_even(p: &QPoly, c_top: &Rational) -> QPoly {
        let once = integrate(p);
        let twice = integrate(&once);
        &twice + &QPoly::constant(Var::X, c_top.clone())
    }

    fn integrate(p: &QPoly) -> QPoly {
        let mut out = QPoly::zero(Var::X);
        for (k, c) in p.terms() {
            out = &out + &QPoly::monomial(Var::X, k + 1, c.div(&Rational::from_int(k + 1)));
        }
        out
    }

    #[test]
    fn missing_constants_is_an_error() {
        let mut chain = chain_with(&[]);
        assert!(matches!(
            chain.psi(2),
            Err(Error::MissingConstants { .. })
        ));
    }

    #[test]
    fn theta_values_match_the_displayed_determinant() {
        // theta_1 = x, theta_2 = x^3/3 - c2
        let c2 = q(7, 2);
        let mut chain = chain_with(&[(7, 2)]);
        assert_eq!(chain.theta(1).unwrap(), QPoly::variable(Var::X));
        let expected = QPoly::new(Var::X, 0, vec![Scalar::neg(&c2), q(0, 1), q(0, 1), q(1, 3)]);
        assert_eq!(chain.theta(2).unwrap(), expected);
        assert_eq!(chain.theta(0).unwrap(), QPoly::one(Var::X));
        assert_eq!(chain.theta(-1).unwrap(), QPoly::one(Var::X));
    }

    #[test]
    fn theta_3_satisfies_burchnall_chaundy() {
        let mut chain = chain_with(&[(7, 2), (-5, 3)]);
        let t1 = chain.theta(1).unwrap();
        let t2 = chain.theta(2).unwrap();
        let t3 = chain.theta(3).unwrap();
        // theta_3' theta_1 - theta_3 theta_1' = theta_2^2
        assert!(check_bc(&t1, &t2, &t3));
    }

    #[test]
    fn kdv_potentials() {
        let mut chain = chain_with(&[(4, 1)]); // c2 = 4t with t = 1
        assert!(kdv_potential(0, &mut chain).unwrap().is_zero());
        // V_1 = -2/x^2
        let v1 = kdv_potential(1, &mut chain).unwrap();
        let expected = RationalFunction::new(
            QPoly::constant(Var::X, q(-2, 1)),
            QPoly::monomial(Var::X, 2, Rational::one()),
        )
        .unwrap();
        assert_eq!(v1, expected);
        // V_2 = -6x(x^3 + 24t)/(x^3 - 12t)^2 at t = 1
        let v2 = kdv_potential(2, &mut chain).unwrap();
        let num = QPoly::new(Var::X, 1, vec![q(-144, 1), q(0, 1), q(0, 1), q(-6, 1)]);
        let den = QPoly::new(Var::X, 0, vec![q(-12, 1), q(0, 1), q(0, 1), q(1, 1)]);
        let expected = RationalFunction::new(num, &den * &den).unwrap();
        assert_eq!(v2, expected);
    }

    #[test]
    fn yablonskii_vorobev_match_the_tau_list() {
        assert_eq!(yv_polynomial(0), QPoly::one(Var::Z));
        assert_eq!(yv_polynomial(1), QPoly::variable(Var::Z));
        // (z^3 + 4)/3
        assert_eq!(
            yv_polynomial(2),
            QPoly::new(Var::Z, 0, vec![q(4, 3), q(0, 1), q(0, 1), q(1, 3)])
        );
        // (z^10 + 60 z^7 + 11200 z)/4725
        let y4 = yv_polynomial(4);
        let mut expected = QPoly::monomial(Var::Z, 10, q(1, 4725));
        expected = &expected + &QPoly::monomial(Var::Z, 7, q(60, 4725));
        expected = &expected + &QPoly::monomial(Var::Z, 1, q(11200, 4725));
        assert_eq!(y4, expected);
    }

    #[test]
    fn schur_polynomials() {
        assert_eq!(schur_p(0), QPoly::one(Var::Z));
        assert!(schur_p(-3).is_zero());
        // p_3 = z^3/6 - 4/3, frozen from multiplying the truncated series
        // exp(z l) * exp(-4/3 l^3).
        let oracle = schur_series_oracle(3);
        assert_eq!(
            schur_p(3),
            QPoly::new(Var::Z, 0, vec![q(-4, 3), q(0, 1), q(0, 1), q(1, 6)])
        );
        assert_eq!(schur_p(3), oracle);
    }

    /// Test oracle: multiply the truncated lambda-series exp(z*l) and
    /// exp(-4/3 l^3) term by term and read off the lambda^k coefficient.
    /// This is an actual series convolution, independent of the closed
    /// form used by `schur_p`.
    fn schur_series_oracle(k: i64) -> QPoly {
        let n = k as usize;
        // exp(z*l): coefficient of l^i is z^i/i!.
        let a: Vec<QPoly> = (0..=n)
            .map(|i| QPoly::monomial(Var::Z, i as i64, Rational::one().div(&factorial(i as i64))))
            .collect();
        // exp(-4/3 l^3): coefficient of l^i is (-4/3)^(i/3)/(i/3)! when 3 | i.
        let b: Vec<QPoly> = (0..=n)
            .map(|i| {
                if i % 3 == 0 {
                    QPoly::constant(
                        Var::Z,
                        q(-4, 3).pow((i / 3) as u32).div(&factorial((i / 3) as i64)),
                    )
                } else {
                    QPoly::zero(Var::Z)
                }
            })
            .collect();
        let mut coeff = QPoly::zero(Var::Z);
        for i in 0..=n {
            coeff = &coeff + &(&a[i] * &b[n - i]);
        }
        coeff
    }

    #[test]
    fn schur_derivative_steps_down() {
        for k in 0..8 {
            assert_eq!(schur_p(k).d_dz(), schur_p(k - 1));
        }
    }

    #[test]
    fn ko_tau_matches_the_tau_list() {
        assert_eq!(ko_tau(0), QPoly::one(Var::Z));
        assert_eq!(ko_tau(1), QPoly::variable(Var::Z));
        // (z^6 + 20 z^3 - 80)/45
        let mut expected = QPoly::monomial(Var::Z, 6, q(1, 45));
        expected = &expected + &QPoly::monomial(Var::Z, 3, q(20, 45));
        expected = &expected + &QPoly::constant(Var::Z, q(-80, 45));
        assert_eq!(ko_tau(3), expected);
    }

    #[test]
    fn pii_rational_matches_table() {
        // alpha = 0 -> q = 0
        assert!(pii_rational(0).q.is_zero());
        // alpha = 1 -> q = -1/z
        let s1 = pii_rational(1);
        let expected = RationalFunction::new(
            QPoly::constant(Var::Z, q(-1, 1)),
            QPoly::variable(Var::Z),
        )
        .unwrap();
        assert_eq!(s1.q, expected);
        // alpha = 2 -> q = 1/z - 3z^2/(z^3+4)
        let s2 = pii_rational(2);
        let inv_z = RationalFunction::new(QPoly::one(Var::Z), QPoly::variable(Var::Z)).unwrap();
        let frac = RationalFunction::new(
            QPoly::monomial(Var::Z, 2, q(3, 1)),
            QPoly::new(Var::Z, 0, vec![q(4, 1), q(0, 1), q(0, 1), q(1, 1)]),
        )
        .unwrap();
        assert_eq!(s2.q, inv_z.sub(&frac));
        // antisymmetry
        assert_eq!(pii_rational(-2).q, s2.q.neg());
    }

    #[test]
    fn p34_solutions_match_displayed_values() {
        // ell = 1/2 -> -z/2
        let p = p34_solution(&q(1, 2)).unwrap();
        assert_eq!(
            p,
            QRatFn::from_poly(QPoly::monomial(Var::Z, 1, q(-1, 2)))
        );
        // ell = 3/2 -> -2/z^2 - z/2
        let p = p34_solution(&q(3, 2)).unwrap();
        let expected = RationalFunction::new(
            QPoly::new(Var::Z, 0, vec![q(-2, 1), q(0, 1), q(0, 1), q(-1, 2)]),
            QPoly::monomial(Var::Z, 2, Rational::one()),
        )
        .unwrap();
        assert_eq!(p, expected);
        // ell = 5/2 -> -6z(z^3-8)/(z^3+4)^2 - z/2
        let p = p34_solution(&q(5, 2)).unwrap();
        let den = QPoly::new(Var::Z, 0, vec![q(4, 1), q(0, 1), q(0, 1), q(1, 1)]);
        let num = QPoly::new(Var::Z, 1, vec![q(48, 1), q(0, 1), q(0, 1), q(-6, 1)]);
        let head = RationalFunction::new(num, &den * &den).unwrap();
        let tail = QRatFn::from_poly(QPoly::monomial(Var::Z, 1, q(-1, 2)));
        assert_eq!(p, head.add(&tail));
    }

    #[test]
    fn verify_report_is_all_green() {
        let mut chain = chain_with(&[(7, 2), (-5, 3), (11, 5)]);
        let report = verify_am_identities(3, &mut chain).unwrap();
        assert!(report.all_ok(), "failures: {:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn perturbed_solution_fails_the_ode() {
        // q = -1/z + 1 is not a Painlevé II solution at alpha = 1.
        let bad = RationalFunction::new(
            QPoly::from_int_coeffs(Var::Z, &[-1, 1]),
            QPoly::variable(Var::Z),
        )
        .unwrap();
        assert!(!pii_residual(&bad, &Rational::one()).is_zero());
    }

    #[test]
    fn weighted_homogeneity() {
        // theta_k(gamma x, gamma^(2i-1) c_i) = gamma^(k(k+1)/2) theta_k.
        let gamma = q(3, 2);
        let base = [(7, 2), (-5, 3), (11, 5)];
        let mut chain = chain_with(&base);
        let scaled: Vec<Rational> = base
            .iter()
            .enumerate()
            .map(|(idx, &(n, d))| {
                let i = idx as i64 + 2;
                &q(n, d) * &gamma.pow((2 * i - 1) as u32)
            })
            .collect();
        let mut scaled_chain = AMChain::new(scaled);
        for k in 1..=4i64 {
            let lhs = scaled_chain.theta(k).unwrap().scale_var(&gamma);
            let weight = (k * (k + 1) / 2) as u32;
            let rhs = chain.theta(k).unwrap().scalar_mul(&gamma.pow(weight));
            assert_eq!(lhs, rhs, "k = {k}");
        }
    }
}
