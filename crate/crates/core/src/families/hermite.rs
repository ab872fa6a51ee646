use num_bigint::BigInt;
use num_traits::One;

use super::kernel_sum;
use crate::family::FamilySpec;
use crate::matrix::ExactMatrix;
use crate::opoly::special_value;
use crate::rational::Rational;
use crate::special::{barnes_g_int, binomial, factorial_q};

fn two_pow(k: usize) -> Rational {
    Rational::from_integer(BigInt::one() << k)
}

/// `2^(-n(n+1)/2) G(n+2)`.
pub(super) fn det(n: usize) -> Rational {
    let g = barnes_g_int(n as i64 + 2).expect("n + 2 >= 2");
    g / two_pow(n * (n + 1) / 2)
}

/// `sum_k 2^(i+j) C(k,i) H_{k-i}(0) C(k,j) H_{k-j}(0) / (k! 2^k)`.
pub(super) fn inverse(spec: &FamilySpec, n: usize) -> ExactMatrix {
    kernel_sum(
        n,
        |k| Rational::one() / (factorial_q(k) * two_pow(k)),
        |k, i| two_pow(i) * binomial(k, i as i64) * special_value(spec, k - i, i),
    )
}
