//! The doubly indexed coefficient table A_{m,k} and the Wronskian
//! entries W_n.
//!
//! For m > 0 the table is generated downward in k from the seed
//! A_{m,2m} = (3a/2)^m c/m!, via
//!
//!   A_{m,k} = (3a/k) A_{m-d,k-2} + ((k+1)/3) d A_{m,k+1},   d = sgn(m),
//!
//! with A_{m,1} = (2/3) d A_{m,2} and A_{m,0} = 0 for m != 0, A_{0,0} = c.
//! The m < 0 half runs the d = -1 recursion directly; the sign symmetry
//! A_{m,k} = (-1)^k A_{-m,k} is then a checked property, not an input.

use std::collections::HashMap;

use super::Profile;
use crate::rings::{Poly, Var};
use crate::scalars::{NFScalar, Rational, Scalar};
use crate::Error;

pub struct CoeffTable<F: Scalar> {
    a: F,
    c: F,
    cache: HashMap<(i64, i64), F>,
}

impl CoeffTable<NFScalar> {
    pub fn canonical() -> Self {
        CoeffTable::new(NFScalar::sqrt3(), NFScalar::root4_of_3())
    }
}

impl CoeffTable<Rational> {
    pub fn alternate() -> Self {
        CoeffTable::new(Rational::new(2, 3), Rational::one())
    }
}

impl<F: Scalar> CoeffTable<F> {
    pub fn new(a: F, c: F) -> Self {
        assert!(!a.is_zero() && !c.is_zero(), "profile constants must be non-zero");
        CoeffTable {
            a,
            c,
            cache: HashMap::new(),
        }
    }

    pub fn a(&self) -> &F {
        &self.a
    }

    pub fn c(&self) -> &F {
        &self.c
    }

    /// A_{m,k}; zero outside the triangle (k > 2|m|, or k = 0 with m != 0).
    pub fn coeff(&mut self, m: i64, k: i64) -> F {
        assert!(k >= 0, "column index must be non-negative");
        if k > 2 * m.abs() {
            return F::zero();
        }
        if m == 0 {
            return if k == 0 { self.c.clone() } else { F::zero() };
        }
        if k == 0 {
            return F::zero();
        }
        if let Some(v) = self.cache.get(&(m, k)) {
            return v.clone();
        }
        self.build_row(m);
        self.cache[&(m, k)].clone()
    }

    /// Fill the cache for row m (all 1 <= k <= 2|m|), recursing on the
    /// row nearer zero.
    fn build_row(&mut self, m: i64) {
        let mm = m.abs();
        let delta = m.signum();
        let delta_f = F::from_int(delta);
        // Seed: A_{m,2|m|} = (3a/2)^|m| c / |m|!.
        let three_a_half = self.a.mul(&F::from_rational(&Rational::new(3, 2)));
        let mut fact = F::one();
        for i in 2..=mm {
            fact = fact.mul(&F::from_int(i));
        }
        let seed = three_a_half.pow(mm as u32).mul(&self.c).div(&fact);
        self.cache.insert((m, 2 * mm), seed);
        // Downward in k; the (m - delta) row entries are fetched
        // recursively (they live nearer m = 0).
        for k in (2..2 * mm).rev() {
            let inner = self.coeff(m - delta, k - 2);
            let three_a_over_k = self.a.mul(&F::from_int(3)).div(&F::from_int(k));
            let up = self.cache[&(m, k + 1)].clone();
            let val = three_a_over_k
                .mul(&inner)
                .add(&F::from_rational(&Rational::new(k + 1, 3)).mul(&delta_f).mul(&up));
            self.cache.insert((m, k), val);
        }
        if mm >= 1 {
            let a2 = self.cache[&(m, 2.min(2 * mm))].clone();
            let a1 = F::from_rational(&Rational::new(2, 3)).mul(&delta_f).mul(&a2);
            self.cache.insert((m, 1), a1);
        }
    }

    /// Wronskian entry W_n = sum_{k=0}^{2|n|-2} A_{|n|-1,k} (d zeta^2)^k,
    /// d = sgn(n), as a polynomial in zeta.
    pub fn entry_w(&mut self, n: i64) -> Result<Poly<F>, Error> {
        if n == 0 {
            return Err(Error::Invalid("W_0 is not defined (n must be non-zero)".into()));
        }
        let m = n.abs() - 1;
        let delta = n.signum();
        let mut p = Poly::zero(Var::Zeta);
        for k in 0..=2 * m {
            let mut a = self.coeff(m, k);
            if delta < 0 && k % 2 == 1 {
                a = a.neg();
            }
            if !a.is_zero() {
                p = &p + &Poly::monomial(Var::Zeta, 2 * k, a);
            }
        }
        Ok(p)
    }
}

/// A_{m,k} under the named profile, as a number-field scalar.
pub fn coeff_a(m: i64, k: i64, profile: Profile) -> NFScalar {
    match profile {
        Profile::Canonical => CoeffTable::canonical().coeff(m, k),
        Profile::Alternate => CoeffTable::alternate().coeff(m, k).to_nf(),
    }
}

/// W_n under the named profile, promoted to the number field.
pub fn entry_w(n: i64, profile: Profile) -> Result<Poly<NFScalar>, Error> {
    match profile {
        Profile::Canonical => CoeffTable::canonical().entry_w(n),
        Profile::Alternate => Ok(CoeffTable::alternate().entry_w(n)?.map_coeffs(|c| c.to_nf())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn boundary_values_canonical() {
        // A_{0,0} = c = 3^(1/4)
        assert_eq!(coeff_a(0, 0, Profile::Canonical), NFScalar::root4_of_3());
        // A_{1,2} = (3 sqrt(3)/2) 3^(1/4)
        let expected = NFScalar::sqrt3()
            .scale(&q(3, 2))
            .mul(&NFScalar::root4_of_3());
        assert_eq!(coeff_a(1, 2, Profile::Canonical), expected);
        // A_{m,0} = 0 for m != 0 and A_{0,k} = 0 for k >= 1
        assert!(coeff_a(3, 0, Profile::Canonical).is_zero());
        assert!(coeff_a(0, 2, Profile::Canonical).is_zero());
        // zero above the diagonal k > 2|m|
        assert!(coeff_a(1, 3, Profile::Canonical).is_zero());
    }

    #[test]
    fn alternate_profile_matches_closed_forms() {
        // With c = 1, a = 2/3: A_{n,2n} = 1/n!, A_{n,2n-1} = (2/9)(2n+1)/(n-1)!,
        // A_{n,2n-2} = (2/81)(4n^2+10n+9)/(n-2)!.
        let mut t = CoeffTable::alternate();
        let fact = |n: i64| -> Rational {
            let mut f = Rational::one();
            for i in 2..=n {
                f = &f * &Rational::from_int(i);
            }
            f
        };
        for n in 1..=6i64 {
            assert_eq!(t.coeff(n, 2 * n), Rational::one().div(&fact(n)), "A(n,2n) n={n}");
            assert_eq!(
                t.coeff(n, 2 * n - 1),
                q(2, 9)
                    .mul(&Rational::from_int(2 * n + 1))
                    .div(&fact(n - 1)),
                "A(n,2n-1) n={n}"
            );
            if n >= 2 {
                assert_eq!(
                    t.coeff(n, 2 * n - 2),
                    q(2, 81)
                        .mul(&Rational::from_int(4 * n * n + 10 * n + 9))
                        .div(&fact(n - 2)),
                    "A(n,2n-2) n={n}"
                );
            }
        }
        // The spec-level anchor: A_{2,3} = 10/9.
        assert_eq!(t.coeff(2, 3), q(10, 9));
    }

    #[test]
    fn sign_symmetry_of_the_table() {
        // A_{m,k} = (-1)^k A_{-m,k}, with the negative rows generated by
        // their own d = -1 recursion.
        let mut t = CoeffTable::canonical();
        for m in 1..=6i64 {
            for k in 0..=2 * m {
                let pos = t.coeff(m, k);
                let neg = t.coeff(-m, k);
                let expect = if k % 2 == 0 { pos.clone() } else { pos.neg() };
                assert_eq!(neg, expect, "m={m}, k={k}");
            }
        }
    }

    #[test]
    fn w_entries_match_known_values() {
        // W_1 = 3^(1/4); W_2 = 3^(1/4) sqrt(3) (zeta^2 + 3/2 zeta^4);
        // W_-2 = 3^(1/4) sqrt(3) (-zeta^2 + 3/2 zeta^4).
        let mut t = CoeffTable::canonical();
        let c = NFScalar::root4_of_3();
        let w1 = t.entry_w(1).unwrap();
        assert_eq!(w1, Poly::constant(Var::Zeta, c.clone()));
        let scale = c.mul(&NFScalar::sqrt3());
        let w2 = t.entry_w(2).unwrap();
        let expected = Poly::new(
            Var::Zeta,
            2,
            vec![scale.clone(), NFScalar::zero(), scale.scale(&q(3, 2))],
        );
        assert_eq!(w2, expected);
        let w2m = t.entry_w(-2).unwrap();
        let expected_m = Poly::new(
            Var::Zeta,
            2,
            vec![scale.neg(), NFScalar::zero(), scale.scale(&q(3, 2))],
        );
        assert_eq!(w2m, expected_m);
        assert!(t.entry_w(0).is_err());
    }

    #[test]
    fn recursion_is_consistent_at_the_seed() {
        // The k = 2m case of the downward recursion reproduces the seed,
        // which forces A_{m,2m+1} = 0.
        let mut t = CoeffTable::canonical();
        for m in 1..=5i64 {
            let lhs = t.coeff(m, 2 * m);
            let rhs = NFScalar::sqrt3()
                .scale(&Rational::new(3, 1))
                .scale(&Rational::new(1, 2 * m))
                .mul(&t.coeff(m - 1, 2 * m - 2));
            assert_eq!(lhs, rhs, "m={m}");
        }
    }
}
