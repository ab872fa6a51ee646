//! Closed-form data for the classical polynomials: values at the anchor
//! point, coefficient vectors, and norms under the normalized weight.
//!
//! Polynomials are in the standard normalization (`H_n`, `L_n^alpha`,
//! `C_n^lambda`, `P_n^(alpha,beta)`). Coefficient vectors are written in the
//! family's natural basis, powers of `x - anchor`: monomials `x^i` for the
//! first four families and `(x - 1)^i` for shifted Jacobi.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{FamilySpec, Params};
use crate::rational::{int, ratio, Rational};
use crate::special::{binomial, factorial_q, hyp_terminating, pochhammer};

/// Dense coefficient vector, index `i` holding the coefficient of the `i`-th
/// basis element. The leading coefficient is never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyCoeffs {
    coeffs: Vec<Rational>,
}

impl PolyCoeffs {
    pub fn new(coeffs: Vec<Rational>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if !lead.is_zero() => Ok(PolyCoeffs { coeffs }),
            _ => Err(Error::Domain("coefficient vector needs a nonzero leading entry".into())),
        }
    }

    pub(crate) fn new_unchecked(coeffs: Vec<Rational>) -> Self {
        debug_assert!(coeffs.last().is_some_and(|c| !c.is_zero()));
        PolyCoeffs { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of basis element `i`, zero above the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> &Rational {
        self.coeffs.last().expect("nonempty by construction")
    }

    /// Horner evaluation in the basis variable.
    pub fn eval(&self, s: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * s + c)
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }
}

/// `(2k + a) (a)_k / a`, continued to `a = 0`.
///
/// This combination appears in the Jacobi norms with `a = alpha + beta + 1`,
/// which vanishes on the valid line `alpha + beta = -1`. For `k = 0` it is 1
/// and for `k >= 1` it equals `(2k + a) (a + 1)_{k-1}`.
pub(crate) fn jacobi_weight(a: &Rational, k: usize) -> Rational {
    if k == 0 {
        Rational::one()
    } else {
        (int(2 * k as i64) + a) * pochhammer(&(a + Rational::one()), k - 1)
    }
}

fn neg_one_pow(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        int(-1)
    }
}

/// Value of the degree-`k` polynomial with parameters raised by `shift`, at
/// the family's anchor (0, or 1 for shifted Jacobi).
pub fn special_value(spec: &FamilySpec, k: usize, shift: usize) -> Rational {
    match spec.shifted(shift).params() {
        Params::Hermite => {
            if k % 2 == 1 {
                return Rational::zero();
            }
            let m = k / 2;
            neg_one_pow(m) * factorial_q(k) / factorial_q(m)
        }
        Params::Laguerre { alpha } => pochhammer(&(alpha + Rational::one()), k) / factorial_q(k),
        Params::Gegenbauer { lambda } => {
            if k % 2 == 1 {
                return Rational::zero();
            }
            let m = k / 2;
            neg_one_pow(m) * pochhammer(lambda, m) / factorial_q(m)
        }
        Params::Jacobi { alpha, beta } => {
            let a1 = alpha + Rational::one();
            let upper = int(k as i64) + alpha + beta + Rational::one();
            let sum = hyp_terminating(k, &[upper], &[a1.clone()], &ratio(1, 2))
                .expect("alpha + 1 > 0, lower parameter never vanishes");
            pochhammer(&a1, k) / factorial_q(k) * sum
        }
        Params::ShiftedJacobi { alpha, .. } => {
            pochhammer(&(alpha + Rational::one()), k) / factorial_q(k)
        }
    }
}

/// Terms `t_m` of `prefactor * 2F1(-n, upper; lower; u)` as a polynomial in `u`.
fn two_f_one_terms(n: usize, prefactor: Rational, upper: &Rational, lower: &Rational) -> Vec<Rational> {
    let neg_n = -int(n as i64);
    (0..=n)
        .map(|m| {
            &prefactor * pochhammer(&neg_n, m) * pochhammer(upper, m)
                / (pochhammer(lower, m) * factorial_q(m))
        })
        .collect()
}

/// Re-expands `sum_m t_m ((1 - x)/2)^m` in monomials `x^i`.
fn half_one_minus_x_to_monomials(terms: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); terms.len()];
    for (m, t) in terms.iter().enumerate() {
        let scaled = t / Rational::from_integer(BigInt::one() << m);
        for (i, slot) in out.iter_mut().enumerate().take(m + 1) {
            *slot += &scaled * binomial(m, i as i64) * neg_one_pow(i);
        }
    }
    out
}

/// Coefficients of the degree-`k` polynomial in the family's natural basis,
/// expanded from its terminating hypergeometric representation.
pub fn poly_coeffs(spec: &FamilySpec, k: usize) -> PolyCoeffs {
    let coeffs = match spec.params() {
        Params::Hermite => {
            // (2x)^k 2F0(-k/2, (1-k)/2; ; -1/x^2)
            let mut out = vec![Rational::zero(); k + 1];
            let (a, b) = (ratio(-(k as i64), 2), ratio(1 - k as i64, 2));
            let two_k = Rational::from_integer(BigInt::one() << k);
            for m in 0..=k / 2 {
                out[k - 2 * m] =
                    &two_k * neg_one_pow(m) * pochhammer(&a, m) * pochhammer(&b, m) / factorial_q(m);
            }
            out
        }
        Params::Laguerre { alpha } => {
            let a1 = alpha + Rational::one();
            let prefactor = pochhammer(&a1, k) / factorial_q(k);
            let neg_k = -int(k as i64);
            (0..=k)
                .map(|m| &prefactor * pochhammer(&neg_k, m) / (pochhammer(&a1, m) * factorial_q(m)))
                .collect()
        }
        Params::Gegenbauer { lambda } => {
            let two_lambda = lambda * int(2);
            let prefactor = pochhammer(&two_lambda, k) / factorial_q(k);
            let upper = &two_lambda + int(k as i64);
            let lower = lambda + ratio(1, 2);
            half_one_minus_x_to_monomials(&two_f_one_terms(k, prefactor, &upper, &lower))
        }
        Params::Jacobi { alpha, beta } | Params::ShiftedJacobi { alpha, beta } => {
            let a1 = alpha + Rational::one();
            let prefactor = pochhammer(&a1, k) / factorial_q(k);
            let upper = int(k as i64) + alpha + beta + Rational::one();
            let terms = two_f_one_terms(k, prefactor, &upper, &a1);
            if matches!(spec.params(), Params::Jacobi { .. }) {
                half_one_minus_x_to_monomials(&terms)
            } else {
                // (1 - x)/2 = -(x - 1)/2, so each term lands directly on (x - 1)^m
                let mut scale = Rational::one();
                terms
                    .into_iter()
                    .map(|t| {
                        let c = t * &scale;
                        scale *= ratio(-1, 2);
                        c
                    })
                    .collect()
            }
        }
    };
    PolyCoeffs::new_unchecked(coeffs)
}

/// Leading coefficient of the degree-`k` polynomial in the natural basis.
pub fn leading_coefficient(spec: &FamilySpec, k: usize) -> Rational {
    let two_k = Rational::from_integer(BigInt::one() << k);
    match spec.params() {
        Params::Hermite => two_k,
        Params::Laguerre { .. } => neg_one_pow(k) / factorial_q(k),
        Params::Gegenbauer { lambda } => two_k * pochhammer(lambda, k) / factorial_q(k),
        Params::Jacobi { alpha, beta } | Params::ShiftedJacobi { alpha, beta } => {
            let a = alpha + beta + Rational::one();
            pochhammer(&(a + int(k as i64)), k) / (two_k * factorial_q(k))
        }
    }
}

/// Squared norm `<P_m, P_m>` under the weight normalized to total mass 1.
pub fn norm_squared(spec: &FamilySpec, m: usize) -> Rational {
    match spec.params() {
        Params::Hermite => Rational::from_integer(BigInt::one() << m) * factorial_q(m),
        Params::Laguerre { alpha } => pochhammer(&(alpha + Rational::one()), m) / factorial_q(m),
        Params::Gegenbauer { lambda } => {
            // telescoping ratio (2 lambda + r - 1)(lambda + r - 1) / (r (lambda + r))
            (1..=m).fold(Rational::one(), |acc, r| {
                let r = int(r as i64);
                let num = (lambda * int(2) + &r - Rational::one()) * (lambda + &r - Rational::one());
                let den = &r * (lambda + &r);
                acc * num / den
            })
        }
        Params::Jacobi { alpha, beta } | Params::ShiftedJacobi { alpha, beta } => {
            let a = alpha + beta + Rational::one();
            pochhammer(&(alpha + Rational::one()), m) * pochhammer(&(beta + Rational::one()), m)
                / (factorial_q(m) * jacobi_weight(&a, m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laguerre0() -> FamilySpec {
        FamilySpec::laguerre(int(0)).unwrap()
    }

    #[test]
    fn special_value_examples() {
        assert_eq!(special_value(&laguerre0(), 3, 0), int(1));
        assert_eq!(special_value(&FamilySpec::hermite(), 2, 0), int(-2));
        assert_eq!(special_value(&FamilySpec::hermite(), 2, 5), int(-2));
        let sj = FamilySpec::shifted_jacobi(ratio(1, 2), ratio(1, 2)).unwrap();
        assert_eq!(special_value(&sj, 2, 0), ratio(15, 8));
        let geg = FamilySpec::gegenbauer(int(1)).unwrap();
        assert_eq!(special_value(&geg, 3, 0), int(0));
        // Legendre P_2(0) = -1/2 through both the Gegenbauer and Jacobi routes
        let legendre = FamilySpec::gegenbauer(ratio(1, 2)).unwrap();
        assert_eq!(special_value(&legendre, 2, 0), ratio(-1, 2));
        let jac = FamilySpec::jacobi(int(0), int(0)).unwrap();
        assert_eq!(special_value(&jac, 2, 0), ratio(-1, 2));
    }

    #[test]
    fn poly_coeff_examples() {
        let h = FamilySpec::hermite();
        assert_eq!(poly_coeffs(&h, 0).coeffs(), &[int(1)]);
        assert_eq!(poly_coeffs(&h, 2).coeffs(), &[int(-2), int(0), int(4)]);
        assert_eq!(poly_coeffs(&h, 3).coeffs(), &[int(0), int(-12), int(0), int(8)]);

        let (alpha, beta) = (ratio(1, 3), ratio(1, 5));
        let sj = FamilySpec::shifted_jacobi(alpha.clone(), beta.clone()).unwrap();
        let expected = vec![&alpha + int(1), (&alpha + &beta + int(2)) / int(2)];
        assert_eq!(poly_coeffs(&sj, 1).coeffs(), expected.as_slice());

        // L_2^0(x) = 1 - 2x + x^2/2
        assert_eq!(poly_coeffs(&laguerre0(), 2).coeffs(), &[int(1), int(-2), ratio(1, 2)]);
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_squared(&FamilySpec::hermite(), 0), int(1));
        assert_eq!(norm_squared(&FamilySpec::hermite(), 3), int(48));
        let legendre = FamilySpec::gegenbauer(ratio(1, 2)).unwrap();
        assert_eq!(norm_squared(&legendre, 1), ratio(1, 3));
        // Legendre: 1 / (2m + 1) through the Jacobi route as well
        let jac = FamilySpec::jacobi(int(0), int(0)).unwrap();
        for m in 0..8 {
            assert_eq!(norm_squared(&jac, m), ratio(1, 2 * m as i64 + 1));
            assert_eq!(norm_squared(&legendre, m), ratio(1, 2 * m as i64 + 1));
        }
    }

    #[test]
    fn jacobi_weight_continuation() {
        assert_eq!(jacobi_weight(&int(0), 0), int(1));
        assert_eq!(jacobi_weight(&int(0), 3), int(6 * 2));
        let a = ratio(2, 3);
        for k in 0..6 {
            let direct = (int(2 * k as i64) + &a) * pochhammer(&a, k) / &a;
            assert_eq!(jacobi_weight(&a, k), direct);
        }
    }

    #[test]
    fn poly_coeffs_reject_zero_leading() {
        assert!(PolyCoeffs::new(vec![int(1), int(0)]).is_err());
        assert!(PolyCoeffs::new(vec![]).is_err());
        assert_eq!(PolyCoeffs::new(vec![int(2), int(3)]).unwrap().eval(&int(2)), int(8));
    }
}
