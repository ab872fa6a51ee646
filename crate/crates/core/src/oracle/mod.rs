//! Formula-independent exact linear algebra used as ground truth.

mod report;

pub use report::{verify, Check, VerifyReport, Witness};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;

/// Determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first cleared of denominators, so elimination runs on
/// integers and every division by the previous pivot is exact. Pivots are the
/// first nonzero entry in the column; row swaps flip the sign.
pub fn bareiss_det(m: &ExactMatrix) -> Rational {
    let n = m.dim();
    if n == 0 {
        return Rational::one();
    }
    let mut row_scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = m
        .rows()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row_scale *= &l;
            row.iter().map(|v| v.numer() * (&l / v.denom())).collect()
        })
        .collect();

    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return Rational::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                debug_assert!((&v % &prev).is_zero());
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = Rational::new(prev, row_scale);
    if negate {
        -det
    } else {
        det
    }
}

/// Inverse by Gauss-Jordan elimination on `[M | I]`.
pub fn gauss_inverse(m: &ExactMatrix) -> Result<ExactMatrix> {
    let n = m.dim();
    let mut a = m.to_rows();
    let mut inv = ExactMatrix::identity(n).to_rows();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero()).ok_or(Error::SingularMatrix)?;
        a.swap(p, k);
        inv.swap(p, k);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= &pivot;
            inv[k][j] /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in 0..n {
                let (ak, ik) = (a[k][j].clone(), inv[k][j].clone());
                a[i][j] -= &f * ak;
                inv[i][j] -= &f * ik;
            }
        }
    }
    ExactMatrix::from_rows(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    fn hilbert(dim: usize) -> ExactMatrix {
        ExactMatrix::from_fn(dim, |i, j| ratio(1, (i + j + 1) as i64))
    }

    /// Cofactor expansion along the first row.
    fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
        if m.is_empty() {
            return int(1);
        }
        let mut acc = int(0);
        for (c, v) in m[0].iter().enumerate() {
            let minor: Vec<Vec<Rational>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = v * cofactor_det(&minor);
            if c % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(bareiss_det(&ExactMatrix::identity(3)), int(1));
        let m = ExactMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(2)]]).unwrap();
        assert_eq!(bareiss_det(&m), int(1));
        assert_eq!(bareiss_det(&hilbert(3)), ratio(1, 2160));
        assert_eq!(cofactor_det(&hilbert(3).to_rows()), ratio(1, 2160));
        assert_eq!(bareiss_det(&ExactMatrix::zeros(0)), int(1));
    }

    #[test]
    fn determinant_needs_row_exchange() {
        let m = ExactMatrix::from_rows(vec![
            vec![int(0), int(2), int(1)],
            vec![int(3), int(0), int(0)],
            vec![int(1), int(1), ratio(1, 2)],
        ])
        .unwrap();
        assert_eq!(bareiss_det(&m), cofactor_det(&m.to_rows()));
        let singular =
            ExactMatrix::from_rows(vec![vec![int(1), int(2)], vec![int(2), int(4)]]).unwrap();
        assert_eq!(bareiss_det(&singular), int(0));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(gauss_inverse(&ExactMatrix::identity(4)).unwrap(), ExactMatrix::identity(4));
        let m = ExactMatrix::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(2)]]).unwrap();
        let expected =
            ExactMatrix::from_rows(vec![vec![int(2), int(-1)], vec![int(-1), int(1)]]).unwrap();
        assert_eq!(gauss_inverse(&m).unwrap(), expected);
        let singular =
            ExactMatrix::from_rows(vec![vec![int(2), int(0)], vec![int(0), int(0)]]).unwrap();
        assert_eq!(gauss_inverse(&singular), Err(Error::SingularMatrix));
    }

    #[test]
    fn hilbert_inverse_is_integral() {
        let inv = gauss_inverse(&hilbert(2)).unwrap();
        assert_eq!(inv.to_rows(), vec![vec![int(4), int(-6)], vec![int(-6), int(12)]]);
        for dim in 1..=7 {
            assert!(gauss_inverse(&hilbert(dim)).unwrap().is_integral());
        }
    }

    fn small_matrix() -> impl Strategy<Value = ExactMatrix> {
        (1usize..5).prop_flat_map(|dim| {
            prop::collection::vec((-9i64..10, 1i64..5), dim * dim).prop_map(move |v| {
                ExactMatrix::from_fn(dim, |i, j| {
                    let (p, q) = v[i * dim + j];
                    ratio(p, q)
                })
            })
        })
    }

    proptest! {
        #[test]
        fn bareiss_agrees_with_cofactors(m in small_matrix()) {
            prop_assert_eq!(bareiss_det(&m), cofactor_det(&m.to_rows()));
        }

        #[test]
        fn inverse_round_trips(m in small_matrix()) {
            match gauss_inverse(&m) {
                Ok(inv) => {
                    prop_assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(m.dim()));
                    prop_assert_eq!(bareiss_det(&m) * bareiss_det(&inv), int(1));
                    prop_assert_eq!(gauss_inverse(&inv).unwrap(), m);
                }
                Err(_) => prop_assert_eq!(bareiss_det(&m), int(0)),
            }
        }
    }
}
