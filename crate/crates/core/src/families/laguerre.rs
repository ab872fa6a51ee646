use num_traits::One;

use super::kernel_sum;
use crate::matrix::ExactMatrix;
use crate::rational::{int, Rational};
use crate::special::{barnes_g_int, binomial, factorial_q, pochhammer};

/// `G(n+2) G(alpha+n+2) / (G(alpha+1) Gamma(alpha+1)^(n+1))`, where the
/// Gamma-ratio `G(alpha+n+2) / (G(alpha+1) Gamma(alpha+1)^(n+1))` telescopes
/// to `prod_{k=0}^{n} (alpha+1)_k`.
pub(super) fn det(alpha: &Rational, n: usize) -> Rational {
    let a1 = alpha + Rational::one();
    let g = barnes_g_int(n as i64 + 2).expect("n + 2 >= 2");
    (0..=n).fold(g, |acc, k| acc * pochhammer(&a1, k))
}

/// `sum_k (alpha+1)_k / k! C(k,i) C(k,j) / ((-1)^(i+j) (alpha+1)_i (alpha+1)_j)`.
pub(super) fn inverse(alpha: &Rational, n: usize) -> ExactMatrix {
    let a1 = alpha + Rational::one();
    let sign = |i: usize| if i % 2 == 0 { int(1) } else { int(-1) };
    kernel_sum(
        n,
        |k| pochhammer(&a1, k) / factorial_q(k),
        |k, i| sign(i) * binomial(k, i as i64) / pochhammer(&a1, i),
    )
}
