//! Jacobi weight, in the basis `(-x)^k` (Hankel matrix of bare `2F1` values)
//! and in the basis `((1-x)/2)^k` (generalized Hilbert matrix).

use num_bigint::BigInt;
use num_traits::One;

use super::kernel_sum;
use crate::family::FamilySpec;
use crate::matrix::ExactMatrix;
use crate::opoly::{jacobi_weight, special_value};
use crate::rational::{int, Rational};
use crate::special::{binomial, factorial_q, pochhammer};

fn sign(i: usize) -> Rational {
    if i % 2 == 0 {
        int(1)
    } else {
        int(-1)
    }
}

/// Monic norm of degree `m` in the basis `((1-x)/2)^k`:
/// `m! (alpha+1)_m (beta+1)_m / (w_m (m+a)_m^2)` with `a = alpha+beta+1` and
/// `w_m = (2m+a)(a)_m / a`.
fn shifted_norm(alpha: &Rational, beta: &Rational, m: usize) -> Rational {
    let a = alpha + beta + Rational::one();
    let rise = pochhammer(&(&a + int(m as i64)), m);
    factorial_q(m) * pochhammer(&(alpha + Rational::one()), m) * pochhammer(&(beta + Rational::one()), m)
        / (jacobi_weight(&a, m) * &rise * rise)
}

/// Product of monic norms in the basis `(-x)^k`; each is `4^m` times the
/// shifted one.
pub(super) fn det(alpha: &Rational, beta: &Rational, n: usize) -> Rational {
    (0..=n).fold(Rational::one(), |acc, m| {
        acc * Rational::from_integer(BigInt::one() << (2 * m)) * shifted_norm(alpha, beta, m)
    })
}

/// Determinant of `((alpha+1)_{i+j} / (alpha+beta+2)_{i+j})`, the Barnes G
/// form reduced to a product of Pochhammer symbols.
pub(super) fn shifted_det(alpha: &Rational, beta: &Rational, n: usize) -> Rational {
    (0..=n).fold(Rational::one(), |acc, m| acc * shifted_norm(alpha, beta, m))
}

/// `sum_k k! w_k / ((-2)^(i+j) i! j! (alpha+1)_k (beta+1)_k)
///   * (k+a)_i P^{(alpha+i,beta+i)}_{k-i}(0) * (k+a)_j P^{(alpha+j,beta+j)}_{k-j}(0)`
/// with `w_k = (2k+a)(a)_k / a`.
pub(super) fn inverse(spec: &FamilySpec, alpha: &Rational, beta: &Rational, n: usize) -> ExactMatrix {
    let a = alpha + beta + Rational::one();
    let (a1, b1) = (alpha + Rational::one(), beta + Rational::one());
    kernel_sum(
        n,
        |k| factorial_q(k) * jacobi_weight(&a, k) / (pochhammer(&a1, k) * pochhammer(&b1, k)),
        |k, i| {
            let two_i = Rational::from_integer(BigInt::one() << i);
            sign(i) * pochhammer(&(&a + int(k as i64)), i) * special_value(spec, k - i, i)
                / (two_i * factorial_q(i))
        },
    )
}

/// `(-1)^(i+j) / ((alpha+1)_i (alpha+1)_j)
///   * sum_k w_k (alpha+1)_k / (k! (beta+1)_k) C(k,i) C(k,j) (a+k)_i (a+k)_j`,
/// which is the printed `gamma_ij` sum after `(a)_i (a+i)_k = (a)_k (a+k)_i`;
/// this grouping has no division by `a`.
pub(super) fn shifted_inverse(alpha: &Rational, beta: &Rational, n: usize) -> ExactMatrix {
    let a = alpha + beta + Rational::one();
    let (a1, b1) = (alpha + Rational::one(), beta + Rational::one());
    kernel_sum(
        n,
        |k| jacobi_weight(&a, k) * pochhammer(&a1, k) / (factorial_q(k) * pochhammer(&b1, k)),
        |k, i| {
            sign(i) * binomial(k, i as i64) * pochhammer(&(&a + int(k as i64)), i) / pochhammer(&a1, i)
        },
    )
}
