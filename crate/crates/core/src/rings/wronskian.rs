//! Wronskian determinants of exact function families.
//!
//! The matrix row i holds the (i-1)-th z-derivative of the entries.
//! Determinants are evaluated by fraction-free Bareiss elimination over
//! the polynomial ring, after clearing negative powers row by row; naive
//! cofactor expansion is kept as an independent oracle for tests.

use super::{GaugedFunction, Poly, Var};
use crate::scalars::Scalar;
use crate::Error;

/// Wronskian of same-variable (Laurent) polynomials; the empty family has
/// Wronskian 1.
pub fn wronskian<F: Scalar>(var: Var, entries: &[Poly<F>]) -> Result<Poly<F>, Error> {
    for e in entries {
        if e.var() != var {
            return Err(Error::VarMismatch {
                left: var,
                right: e.var(),
            });
        }
    }
    if entries.is_empty() {
        return Ok(Poly::one(var));
    }
    if entries.len() == 1 {
        return Ok(entries[0].clone());
    }
    let n = entries.len();
    let mut matrix = Vec::with_capacity(n);
    matrix.push(entries.to_vec());
    for i in 1..n {
        let prev: &Vec<Poly<F>> = &matrix[i - 1];
        let row = prev.iter().map(|p| p.d_dz()).collect();
        matrix.push(row);
    }
    Ok(determinant_bareiss(matrix))
}

/// Wronskian of gauged functions sharing one gauge g, via the identity
/// Wr(g f_1, ..., g f_n) = g^n Wr(f_1, ..., f_n).
pub fn wronskian_gauged(entries: &[GaugedFunction]) -> Result<GaugedFunction, Error> {
    if entries.is_empty() {
        return Ok(GaugedFunction::one());
    }
    let first = &entries[0];
    for e in entries {
        if !first.same_gauge(e) {
            return Err(Error::GaugeMismatch(
                "Wronskian entries must share one gauge".into(),
            ));
        }
    }
    let bodies: Vec<_> = entries.iter().map(|e| e.body().clone()).collect();
    let det = wronskian(Var::Zeta, &bodies)?;
    Ok(first.gauge_power(entries.len() as i64, det))
}

/// Fraction-free (Bareiss) determinant over F[var]. Consumes the matrix.
pub fn determinant_bareiss<F: Scalar>(mut m: Vec<Vec<Poly<F>>>) -> Poly<F> {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    let var = m[0][0].var();
    if n == 1 {
        return m[0][0].clone();
    }

    // Clear negative exponents row by row; each row scaling multiplies the
    // determinant by var^k, undone at the end.
    let mut cleared: i64 = 0;
    for row in m.iter_mut() {
        let low = row
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| p.lowest_exp())
            .min()
            .unwrap_or(0);
        if low < 0 {
            for p in row.iter_mut() {
                *p = p.shift(-low);
            }
            cleared += -low;
        }
    }

    let mut sign_flip = false;
    let mut prev_pivot = Poly::one(var);
    for k in 0..n - 1 {
        // Pivot: any row with a non-zero entry in column k.
        let pivot_row = (k..n).find(|&r| !m[r][k].is_zero());
        let Some(pr) = pivot_row else {
            return Poly::zero(var);
        };
        if pr != k {
            m.swap(pr, k);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = t
                    .exact_div(&prev_pivot)
                    .expect("Bareiss division is exact by the Sylvester identity");
            }
            m[i][k] = Poly::zero(var);
        }
        prev_pivot = m[k][k].clone();
    }
    let mut det = m[n - 1][n - 1].clone();
    if sign_flip {
        det = det.neg();
    }
    det.shift(-cleared)
}

/// Naive cofactor expansion along the first row; test oracle for the
/// Bareiss path.
pub fn determinant_cofactor<F: Scalar>(m: &[Vec<Poly<F>>]) -> Poly<F> {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|r| r.len() == n), "square matrix");
    let var = m[0][0].var();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut det = Poly::zero(var);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Poly<F>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let cof = entry.mul(&determinant_cofactor(&minor));
        det = if j % 2 == 0 { det.add(&cof) } else { det.sub(&cof) };
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Rational;

    type QPoly = Poly<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn empty_wronskian_is_one() {
        assert_eq!(wronskian::<Rational>(Var::X, &[]).unwrap(), QPoly::one(Var::X));
    }

    #[test]
    fn single_entry_wronskian_is_the_entry() {
        let p = QPoly::from_int_coeffs(Var::X, &[1, 2, 3]);
        assert_eq!(wronskian(Var::X, &[p.clone()]).unwrap(), p);
    }

    #[test]
    fn adler_moser_two_by_two() {
        // Wr(x, x^3/6 + c2) = x^3/3 - c2 with c2 = 7 here.
        let c2 = q(7, 1);
        let psi1 = QPoly::variable(Var::X);
        let psi2 = QPoly::new(Var::X, 0, vec![c2.clone(), q(0, 1), q(0, 1), q(1, 6)]);
        let w = wronskian(Var::X, &[psi1, psi2]).unwrap();
        let expected = QPoly::new(Var::X, 0, vec![Scalar::neg(&c2), q(0, 1), q(0, 1), q(1, 3)]);
        assert_eq!(w, expected);
    }

    #[test]
    fn bareiss_matches_cofactor_with_laurent_entries() {
        // 3x3 with zeta-Laurent entries exercises the clearing step.
        let e = |lowest: i64, cs: &[i64]| {
            QPoly::new(
                Var::Zeta,
                lowest,
                cs.iter().map(|&c| Rational::from_int(c)).collect(),
            )
        };
        let m = vec![
            vec![e(-2, &[1, 3]), e(0, &[2]), e(1, &[1, 1])],
            vec![e(-1, &[5]), e(-3, &[1, 0, 2]), e(0, &[4])],
            vec![e(0, &[1, 1, 1]), e(2, &[7]), e(-1, &[3])],
        ];
        assert_eq!(determinant_bareiss(m.clone()), determinant_cofactor(&m));
    }

    #[test]
    fn singular_matrix_gives_zero() {
        let row = vec![
            QPoly::from_int_coeffs(Var::Z, &[1, 1]),
            QPoly::from_int_coeffs(Var::Z, &[0, 2]),
        ];
        let m = vec![row.clone(), row];
        assert!(determinant_bareiss(m).is_zero());
    }
}
