//! Shifted factorials, binomials, superfactorials and terminating
//! hypergeometric sums, all in exact rational arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// Rising factorial `(a)_n = a (a+1) ... (a+n-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &Rational, n: usize) -> Rational {
    let mut acc = Rational::one();
    let mut term = a.clone();
    for _ in 0..n {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n as u64).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n!` as a rational.
pub fn factorial_q(n: usize) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: usize, k: i64) -> Rational {
    if k < 0 || k as u64 > n as u64 {
        return Rational::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    Rational::from_integer(acc)
}

/// Barnes G at a positive integer: `G(n) = 0! 1! ... (n-2)!`.
pub fn barnes_g_int(n: i64) -> Result<Rational> {
    if n <= 0 {
        return Err(Error::Domain(format!(
            "Barnes G is only evaluated at positive integers, got {n}"
        )));
    }
    let mut acc = BigInt::one();
    let mut fact = BigInt::one();
    for i in 1..=(n - 2).max(0) {
        fact *= i;
        acc *= &fact;
    }
    Ok(Rational::from_integer(acc))
}

/// `pFq(-m, upper; lower; z)`, which terminates after `m + 1` terms.
///
/// Fails with [`Error::ZeroDenominator`] when some lower parameter `c` has
/// `c + k = 0` for a `k < m`, since `(c)_{k+1}` then vanishes inside the sum.
pub fn hyp_terminating(
    m: usize,
    upper: &[Rational],
    lower: &[Rational],
    z: &Rational,
) -> Result<Rational> {
    let neg_m = -int(m as i64);
    let mut term = Rational::one();
    let mut sum = Rational::one();
    for k in 0..m {
        let kq = int(k as i64);
        let mut num = &neg_m + &kq;
        for a in upper {
            num *= a + &kq;
        }
        let mut den = int(k as i64 + 1);
        for c in lower {
            let ck = c + &kq;
            if ck.is_zero() {
                return Err(Error::ZeroDenominator { parameter: c.clone(), term: k + 1 });
            }
            den *= ck;
        }
        term = term * num / den * z;
        sum += &term;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use proptest::prelude::*;

    #[test]
    fn pochhammer_examples() {
        assert_eq!(pochhammer(&int(5), 0), int(1));
        assert_eq!(pochhammer(&int(1), 4), int(24));
        assert_eq!(pochhammer(&ratio(1, 2), 3), ratio(15, 8));
        assert_eq!(pochhammer(&int(-2), 3), int(0));
    }

    #[test]
    fn pochhammer_at_one_is_factorial() {
        for n in 0..=30 {
            assert_eq!(pochhammer(&int(1), n), factorial_q(n));
        }
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), int(6));
        assert_eq!(binomial(3, 5), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(5, -1), int(0));
        assert_eq!(binomial(30, 15), int(155_117_520));
    }

    #[test]
    fn barnes_g_examples() {
        assert_eq!(barnes_g_int(1).unwrap(), int(1));
        assert_eq!(barnes_g_int(2).unwrap(), int(1));
        assert_eq!(barnes_g_int(4).unwrap(), int(2));
        assert_eq!(barnes_g_int(6).unwrap(), int(288));
        assert!(matches!(barnes_g_int(0), Err(Error::Domain(_))));
        assert!(barnes_g_int(-3).is_err());
    }

    #[test]
    fn barnes_g_recurrence() {
        for n in 0..20usize {
            let lhs = barnes_g_int(n as i64 + 2).unwrap();
            let rhs = barnes_g_int(n as i64 + 1).unwrap() * factorial_q(n);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn hypergeometric_examples() {
        let z = int(2);
        assert_eq!(hyp_terminating(0, &[int(7)], &[ratio(1, 3)], &z).unwrap(), int(1));
        assert_eq!(hyp_terminating(1, &[int(1)], &[int(1)], &z).unwrap(), int(-1));
        assert_eq!(hyp_terminating(2, &[int(1)], &[int(1)], &z).unwrap(), int(1));
        // 2F1(-1, 1; 2; 2) = 1 - 1*1/2*2 = 0
        assert_eq!(hyp_terminating(1, &[int(1)], &[int(2)], &z).unwrap(), int(0));
    }

    #[test]
    fn hypergeometric_brute_force() {
        // direct sum of (-m)_k (a)_k (b)_k / ((c)_k k!) z^k
        let (a, b, c, z) = (ratio(3, 2), ratio(-1, 3), ratio(5, 4), ratio(-2, 7));
        for m in 0..8 {
            let mut expected = Rational::zero();
            for k in 0..=m {
                expected += pochhammer(&int(-(m as i64)), k) * pochhammer(&a, k) * pochhammer(&b, k)
                    / (pochhammer(&c, k) * factorial_q(k))
                    * num_traits::pow(z.clone(), k);
            }
            let got = hyp_terminating(m, &[a.clone(), b.clone()], &[c.clone()], &z).unwrap();
            assert_eq!(got, expected, "m = {m}");
        }
    }

    #[test]
    fn hypergeometric_zero_denominator() {
        let err = hyp_terminating(3, &[int(1)], &[int(-1)], &int(1)).unwrap_err();
        assert_eq!(err, Error::ZeroDenominator { parameter: int(-1), term: 2 });
        // -m is allowed as a lower parameter once the sum stops before it vanishes
        assert!(hyp_terminating(2, &[int(1)], &[int(-2)], &int(1)).is_ok());
    }

    proptest! {
        #[test]
        fn pochhammer_recurrence(p in -40i64..40, q in 1i64..12, n in 0usize..15) {
            let a = ratio(p, q);
            let lhs = pochhammer(&a, n + 1);
            let rhs = pochhammer(&a, n) * (&a + int(n as i64));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn single_term_series_is_one(p in -20i64..20, q in 1i64..9, z in -5i64..5) {
            let a = ratio(p, q);
            prop_assert_eq!(hyp_terminating(0, &[a.clone()], &[a], &int(z)).unwrap(), int(1));
        }
    }
}
