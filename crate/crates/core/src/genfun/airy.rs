//! Exact-rational Airy machinery: the asymptotic coefficients u_k and a
//! high-precision Maclaurin evaluator for Ai/Bi on a validated range.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::scalars::{Rational, Scalar};
use crate::Error;

/// Working precision of the rational series summation, in bits. The
/// target accuracy of the numeric spot checks is ~1e-10, so 320 bits
/// leaves a huge margin for the finite-difference combinations.
const PREC_BITS: u32 = 320;

/// Largest |x| accepted by the Maclaurin evaluator. The series converges
/// everywhere; this cap keeps the term count and bit growth bounded while
/// covering the full acceptance grid (arguments stay below ~11.3).
const MACLAURIN_RANGE: i64 = 12;

/// Airy asymptotic-series coefficient u_k.
pub fn airy_u(k: usize) -> Rational {
    let mut u = Rational::one();
    for i in 1..=k as i64 {
        let num = Rational::from_int((6 * i - 5) * (6 * i - 3) * (6 * i - 1));
        let den = Rational::from_int(216 * i * (2 * i - 1));
        u = u.mul(&num).div(&den);
    }
    u
}

/// Ai(0), Ai'(0), Bi(0), Bi'(0) to 40 decimal digits.
/// Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3),
/// Bi(0) = sqrt(3) Ai(0), Bi'(0) = -sqrt(3) Ai'(0).
const AI_0: &str = "0.35502805388781723926006318600416787905087781";
const AIP_0: &str = "-0.258819403792806798405183560189211295465193595";
const BI_0: &str = "0.614926627446000735150922369093631479843691944";
const BIP_0: &str = "0.448288357353826357914823710398847980823946827";

/// Ai(x) and Bi(x) by exact-rational Maclaurin summation:
/// Ai = Ai(0) f + Ai'(0) g, Bi = Bi(0) f + Bi'(0) g, where
/// f = sum x^(3k) / ((3k)(3k-1)(3k-3)(3k-4)...),
/// g = sum x^(3k+1) / ((3k+1)(3k)(3k-2)(3k-3)...),
/// via the term recurrences f: t *= x^3/((3k+2)(3k+3)),
///                          g: t *= x^3/((3k+3)(3k+4)).
///
/// Summation is exact up to a per-term rounding at 2^-320, so there is no
/// floating-point cancellation even where Ai is 20 orders of magnitude
/// below the individual terms.
pub fn airy_ai_bi(x: &Rational) -> Result<(Rational, Rational), Error> {
    if x.abs() > Rational::from_int(MACLAURIN_RANGE) {
        return Err(Error::OutOfRange(format!(
            "|{x}| exceeds the validated Maclaurin range {MACLAURIN_RANGE}"
        )));
    }
    let x = x.round_to_bits(PREC_BITS);
    let x3 = x.mul(&x).mul(&x).round_to_bits(PREC_BITS);
    let mut f = Rational::zero();
    let mut g = Rational::zero();
    let mut tf = Rational::one();
    let mut tg = x.clone();
    // Tail bound: |x| <= 12 and 140 cubic steps put the next term below
    // 12^420/1260! ~ 1e-1700; iteration stops far earlier in practice.
    let stop = tiny();
    for k in 0..140u32 {
        f = f.add(&tf).round_to_bits(PREC_BITS);
        g = g.add(&tg).round_to_bits(PREC_BITS);
        let k3 = 3 * k as i64;
        tf = tf
            .mul(&x3)
            .div(&Rational::from_int((k3 + 2) * (k3 + 3)))
            .round_to_bits(PREC_BITS);
        tg = tg
            .mul(&x3)
            .div(&Rational::from_int((k3 + 3) * (k3 + 4)))
            .round_to_bits(PREC_BITS);
        if tf.abs() < stop && tg.abs() < stop {
            break;
        }
    }
    let ai0: Rational = AI_0.parse().expect("constant");
    let aip0: Rational = AIP_0.parse().expect("constant");
    let bi0: Rational = BI_0.parse().expect("constant");
    let bip0: Rational = BIP_0.parse().expect("constant");
    let ai = ai0.mul(&f).add(&aip0.mul(&g)).round_to_bits(PREC_BITS);
    let bi = bi0.mul(&f).add(&bip0.mul(&g)).round_to_bits(PREC_BITS);
    Ok((ai, bi))
}

fn tiny() -> Rational {
    // 2^-360: below the rounding floor of the accumulated sum.
    Rational::from_big(BigInt::from(1), BigInt::from(1) << 360)
}

/// Floor of the integer n-th root by Newton iteration.
fn integer_nth_root(m: &BigInt, n: u32) -> BigInt {
    assert!(!m.is_negative() && n >= 1);
    if m.is_zero() {
        return BigInt::zero();
    }
    let bits = m.bits();
    let mut x = BigInt::from(1) << (bits / n as u64 + 1);
    let nn = BigInt::from(n);
    let n1 = BigInt::from(n - 1);
    loop {
        // x_{k+1} = ((n-1) x + m / x^(n-1)) / n
        let mut p = BigInt::from(1);
        for _ in 0..n - 1 {
            p *= &x;
        }
        let next = (&n1 * &x + m / &p) / &nn;
        if next >= x {
            return x;
        }
        x = next;
    }
}

/// Rational approximation of r^(1/n) (r > 0) accurate to 2^-bits.
pub fn nth_root_rational(r: &Rational, n: u32, bits: u32) -> Result<Rational, Error> {
    if !r.is_positive() {
        return Err(Error::OutOfRange(format!("{n}-th root of non-positive {r}")));
    }
    // r^(1/n) = (p q^(n-1))^(1/n) / q with r = p/q.
    let p = r.numer().clone();
    let q = r.denom().clone();
    let mut inner = p;
    for _ in 0..n - 1 {
        inner *= &q;
    }
    let scaled = inner << (n as u64 * bits as u64);
    let root = integer_nth_root(&scaled, n);
    Ok(Rational::from_big(root, q << bits))
}

/// Rational cube-root approximation.
pub fn cbrt_rational(r: &Rational, bits: u32) -> Result<Rational, Error> {
    nth_root_rational(r, 3, bits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn u_sequence() {
        assert_eq!(airy_u(0), Rational::one());
        // One step of the recurrence: 1*3*5/(216*1*1) = 5/72.
        assert_eq!(airy_u(1), q(5, 72));
        assert_eq!(airy_u(2), q(385, 10368));
        // The lambda^2 constant of the negative-branch expansion is
        // u_2 * 4^2 = 385/648.
        assert_eq!(airy_u(2).mul(&Rational::from_int(16)), q(385, 648));
    }

    #[test]
    fn airy_values_match_references() {
        // Reference values (DLMF/Abramowitz-Stegun style, 15+ digits).
        let cases = [
            // (x, Ai(x), Bi(x))
            (q(0, 1), 0.355_028_053_887_817_2, 0.614_926_627_446_000_7),
            (q(1, 1), 0.135_292_416_312_881_4, 1.207_423_594_952_871_2),
            (q(-2, 1), 0.227_407_428_201_685_58, -0.412_302_587_956_398_49),
            (q(5, 1), 1.083_444_281_360_744_2e-4, 657.792_044_171_171_2),
        ];
        for (x, ai_ref, bi_ref) in cases {
            let (ai, bi) = airy_ai_bi(&x).unwrap();
            assert!(
                (ai.to_f64() - ai_ref).abs() <= 1e-12 * ai_ref.abs().max(1e-6),
                "Ai({x}) = {} vs {ai_ref}",
                ai.to_f64()
            );
            assert!(
                (bi.to_f64() - bi_ref).abs() <= 1e-12 * bi_ref.abs().max(1e-6),
                "Bi({x}) = {} vs {bi_ref}",
                bi.to_f64()
            );
        }
    }

    #[test]
    fn airy_large_argument_has_no_cancellation_blowup() {
        // Ai(10) ~ 1.1047e-10: a f64 Maclaurin sum would lose every digit
        // to cancellation; the exact-rational sum must not.
        let (ai, _) = airy_ai_bi(&q(10, 1)).unwrap();
        let reference = 1.104_753_255_289_868_6e-10;
        assert!(((ai.to_f64() - reference) / reference).abs() < 1e-9);
    }

    #[test]
    fn out_of_range_is_an_error() {
        assert!(matches!(
            airy_ai_bi(&q(13, 1)),
            Err(Error::OutOfRange(_))
        ));
    }

    #[test]
    fn nth_roots() {
        let r = nth_root_rational(&q(2, 1), 2, 200).unwrap();
        let err = r.mul(&r).sub(&q(2, 1)).abs();
        assert!(err < Rational::from_big(BigInt::from(1), BigInt::from(1) << 190));
        let c = cbrt_rational(&q(27, 8), 200).unwrap();
        assert!((c.to_f64() - 1.5).abs() < 1e-30);
    }
}
