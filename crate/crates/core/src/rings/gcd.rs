//! Polynomial gcd backends.
//!
//! Rational-function reduction dominates the cost of the exact ODE
//! checks, and a naive Euclidean remainder sequence over Q suffers
//! severe coefficient blowup. Over Q the gcd is therefore computed by a
//! primitive pseudo-remainder sequence on integer-cleared polynomials,
//! stripping content at every step; the number field keeps the plain
//! monic Euclid, where operands stay small.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::Poly;
use crate::scalars::{NFScalar, Rational, Scalar};

/// Scalar fields with a polynomial-gcd backend.
pub trait GcdScalar: Scalar {
    /// Monic gcd of two ordinary polynomials.
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self>;
}

/// Monic Euclidean algorithm; fine for small operands.
pub(crate) fn euclid_gcd<F: Scalar>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    let mut a = a.clone();
    let mut b = b.clone();
    while !b.is_zero() {
        // Monic-normalize the divisor to contain coefficient growth.
        let bm = b.monic();
        let (_, r) = a.div_rem(&bm);
        a = bm;
        b = r;
    }
    if a.is_zero() {
        a
    } else {
        a.monic()
    }
}

impl GcdScalar for NFScalar {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        euclid_gcd(a, b)
    }
}

impl GcdScalar for Rational {
    fn poly_gcd(a: &Poly<Self>, b: &Poly<Self>) -> Poly<Self> {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        let mut u = integer_primitive(a);
        let mut v = integer_primitive(b);
        if u.len() < v.len() {
            std::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = pseudo_rem(&u, &v);
            u = v;
            v = primitive_part(r);
        }
        let coeffs = u
            .into_iter()
            .map(Rational::from_bigint)
            .collect::<Vec<_>>();
        Poly::from_coeffs(a.var(), coeffs).monic()
    }
}

/// Ascending integer coefficients of the primitive part (denominators and
/// content cleared, leading coefficient positive).
fn integer_primitive(p: &Poly<Rational>) -> Vec<BigInt> {
    assert!(p.is_polynomial(), "gcd requires ordinary polynomials");
    let deg = p.degree().expect("non-zero") as usize;
    let mut lcm = BigInt::from(1);
    for (_, c) in p.terms() {
        lcm = lcm_big(&lcm, c.denom());
    }
    let mut v: Vec<BigInt> = (0..=deg as i64)
        .map(|k| {
            let c = p.coeff(k);
            c.numer() * (&lcm / c.denom())
        })
        .collect();
    let prim = primitive_part(std::mem::take(&mut v));
    prim
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    a.lcm(b)
}

fn primitive_part(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = content.gcd(c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    for c in v.iter_mut() {
        *c = &*c / &content;
    }
    v
}

/// Pseudo-remainder: lc(b)^(da-db+1) a mod b over the integers.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lc_b = b[db].clone();
    let mut r = a.to_vec();
    while r.len() > db {
        let lead = r.last().unwrap().clone();
        if lead.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - db;
        // r = lc_b * r - lead * x^shift * b
        for c in r.iter_mut() {
            *c = &*c * &lc_b;
        }
        for (i, bc) in b.iter().enumerate() {
            let sub = &lead * bc;
            r[shift + i] = &r[shift + i] - sub;
        }
        debug_assert!(r.last().unwrap().is_zero());
        r.pop();
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}
