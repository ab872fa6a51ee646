use num_bigint::BigInt;
use num_traits::One;

use super::kernel_sum;
use crate::family::FamilySpec;
use crate::matrix::ExactMatrix;
use crate::opoly::special_value;
use crate::rational::{int, Rational};
use crate::special::{factorial_q, pochhammer};

/// `prod_k pi k! Gamma(2l+k) / ((l+k) 2^(2l+2k-1) Gamma(l+k)^2)` divided by
/// `B(1/2, l+1/2)^(n+1)`. With `B(1/2, l+1/2) = pi Gamma(2l) / (2^(2l-1) l Gamma(l)^2)`
/// each factor reduces to `k! (2l)_k / (4^k (l)_k (l+1)_k)`.
pub(super) fn det(lambda: &Rational, n: usize) -> Rational {
    let two_lambda = lambda * int(2);
    let l1 = lambda + Rational::one();
    (0..=n).fold(Rational::one(), |acc, k| {
        let four_k = Rational::from_integer(BigInt::one() << (2 * k));
        acc * factorial_q(k) * pochhammer(&two_lambda, k)
            / (four_k * pochhammer(lambda, k) * pochhammer(&l1, k))
    })
}

/// `2^(i+j) (l)_i (l)_j / (i! j! l) sum_k k! (l+k) C^{l+i}_{k-i}(0) C^{l+j}_{k-j}(0) / (2l)_k`.
///
/// This is the unnormalized inverse multiplied by `B(1/2, l+1/2)`, which turns
/// the prefactor `Gamma(l) / (sqrt(pi) Gamma(l+1/2))` into `1/l`.
pub(super) fn inverse(spec: &FamilySpec, lambda: &Rational, n: usize) -> ExactMatrix {
    let two_lambda = lambda * int(2);
    kernel_sum(
        n,
        |k| factorial_q(k) * (lambda + int(k as i64)) / (pochhammer(&two_lambda, k) * lambda),
        |k, i| {
            Rational::from_integer(BigInt::one() << i) * pochhammer(lambda, i) / factorial_q(i)
                * special_value(spec, k - i, i)
        },
    )
}
