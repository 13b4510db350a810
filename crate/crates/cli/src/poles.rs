//! Rational-root scan for pole reporting.

use painleve_exact::rings::Poly;
use painleve_exact::scalars::{Rational, Scalar};

use num_bigint::BigInt;

/// All rational roots of a polynomial with rational coefficients, by the
/// rational root theorem on the integer-cleared form.
pub fn rational_roots(p: &Poly<Rational>) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.is_zero() || p.is_constant() {
        return roots;
    }
    // x = 0 first (clears the lowest power).
    let low = p.lowest_exp();
    if low > 0 {
        roots.push(Rational::zero());
    }
    // Clear denominators: multiply by the lcm of coefficient denominators.
    let mut lcm = BigInt::from(1);
    for (_, c) in p.terms() {
        lcm = lcm_bigint(&lcm, c.denom());
    }
    let scaled = p.map_coeffs(|c| c.mul(&Rational::from_bigint(lcm.clone())));
    let a0 = scaled.coeff(scaled.lowest_exp().max(low)).numer().clone();
    let an = scaled.leading_coeff().numer().clone();
    for p_div in small_divisors(&a0) {
        for q_div in small_divisors(&an) {
            for sign in [1i64, -1] {
                let cand = Rational::from_big(&p_div * BigInt::from(sign), q_div.clone());
                if !roots.contains(&cand) && eval_is_zero(p, &cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

fn eval_is_zero(p: &Poly<Rational>, x: &Rational) -> bool {
    if x.is_zero() && p.lowest_exp() < 0 {
        return false;
    }
    p.eval(x).is_zero()
}

fn lcm_bigint(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.lcm(b)
}

/// Divisors of |n|, capped: trial division up to 10^6 and the paired
/// cofactors. Covers every denominator appearing at CLI scale.
fn small_divisors(n: &BigInt) -> Vec<BigInt> {
    use num_traits::{Signed, ToPrimitive, Zero};
    let n = n.abs();
    let mut out = Vec::new();
    if n.is_zero() {
        return vec![BigInt::from(1)];
    }
    let cap = 1_000_000i64;
    let mut d = BigInt::from(1);
    while &d * &d <= n && d.to_i64().is_some_and(|v| v <= cap) {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            out.push(&n / &d);
        }
        d += 1;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use painleve_exact::rings::Var;

    #[test]
    fn finds_rational_roots() {
        // (2x - 1)(x + 3) x = 2x^3 + 5x^2 - 3x
        let p = Poly::from_int_coeffs(Var::Z, &[0, -3, 5, 2]);
        let roots = rational_roots(&p);
        assert_eq!(
            roots,
            vec![
                Rational::from_int(-3),
                Rational::zero(),
                Rational::new(1, 2)
            ]
        );
    }

    #[test]
    fn irreducible_denominator_has_no_rational_roots() {
        let p = Poly::from_int_coeffs(Var::Zeta, &[1, 0, 3]); // 3 zeta^2 + 1
        assert!(rational_roots(&p).is_empty());
    }
}
