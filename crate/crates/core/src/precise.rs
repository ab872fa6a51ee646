//! Multiprecision evaluation of Gamma and Barnes G at rational points.
//!
//! Only the optional floating-point outputs use this module. `astro-float`
//! provides `exp`, `ln` and `pi`; log-Gamma is the Stirling series after an
//! exact upward shift, and log Barnes G uses its asymptotic expansion with the
//! additive constant fixed from an exact superfactorial, so Glaisher's
//! constant never has to be known.

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, to_decimal_string, Rational};
use crate::special::{factorial, pochhammer};

const RM: RoundingMode = RoundingMode::ToEven;

/// Largest number of significant digits accepted by the float paths.
pub const MAX_DIGITS: usize = 1000;

/// A nonzero real number as a sign and the logarithm of its magnitude.
#[derive(Debug, Clone)]
pub struct SignedLog {
    pub negative: bool,
    pub ln_abs: BigFloat,
}

/// A rational approximation carrying the number of significant digits it is
/// meant to be shown with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Approx {
    pub value: Rational,
    pub digits: usize,
}

impl std::fmt::Display for Approx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&to_decimal_string(&self.value, self.digits))
    }
}

/// Working precision and cached constants for one batch of evaluations.
pub struct Precise {
    p: usize,
    cc: Consts,
    bernoulli: Vec<Rational>,
    g_constant: Option<BigFloat>,
}

impl Precise {
    /// Context good for `digits` significant decimal digits in final results.
    pub fn new(digits: usize) -> Result<Self> {
        if digits == 0 || digits > MAX_DIGITS {
            return Err(Error::Domain(format!("digits must be in 1..={MAX_DIGITS}")));
        }
        let cc = Consts::new().map_err(|e| Error::Domain(format!("astro-float: {e:?}")))?;
        let p = (digits as f64 * 3.33).ceil() as usize + 96;
        Ok(Precise { p: p.div_ceil(64) * 64, cc, bernoulli: Vec::new(), g_constant: None })
    }

    pub fn precision_bits(&self) -> usize {
        self.p
    }

    /// Exact integer as a float, rounded to the working precision.
    pub fn from_bigint(&self, n: &BigInt) -> BigFloat {
        if n.is_zero() {
            return BigFloat::from_word(0, self.p);
        }
        let (sign, words) = n.to_u64_digits();
        let words: Vec<Word> = words.into_iter().collect();
        let e = (words.len() * 64) as i32;
        let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
        let exact = BigFloat::from_words(&words, s, e);
        let zero = BigFloat::from_word(0, self.p);
        exact.add(&zero, self.p, RM)
    }

    pub fn from_rational(&self, r: &Rational) -> BigFloat {
        self.from_bigint(r.numer()).div(&self.from_bigint(r.denom()), self.p, RM)
    }

    /// Exact rational value of a finite float.
    pub fn to_rational(x: &BigFloat) -> Rational {
        let Some((words, _, sign, exp, _)) = x.as_raw_parts() else {
            return Rational::zero();
        };
        if x.is_zero() {
            return Rational::zero();
        }
        let mantissa = BigInt::from_slice(
            num_bigint::Sign::Plus,
            &words.iter().flat_map(|w| [*w as u32, (*w >> 32) as u32]).collect::<Vec<u32>>(),
        );
        let shift = exp as i64 - 64 * words.len() as i64;
        let mut value = Rational::from_integer(mantissa);
        let two = Rational::from_integer(BigInt::one() << shift.unsigned_abs() as usize);
        if shift >= 0 {
            value *= two;
        } else {
            value /= two;
        }
        if sign == Sign::Neg {
            -value
        } else {
            value
        }
    }

    /// Natural logarithm of a positive rational.
    pub fn ln(&mut self, r: &Rational) -> BigFloat {
        assert!(r.is_positive(), "logarithm of a non-positive number");
        let x = self.from_rational(r);
        x.ln(self.p, RM, &mut self.cc)
    }

    pub fn ln_pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM).ln(self.p, RM, &mut self.cc)
    }

    pub fn ln_two(&mut self) -> BigFloat {
        self.cc.ln_2(self.p, RM)
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_word(0, self.p)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    /// `a * r` for an exact rational factor.
    pub fn scale(&self, a: &BigFloat, r: &Rational) -> BigFloat {
        a.mul(&self.from_rational(r), self.p, RM)
    }

    /// `exp(x)` as an exact rational (the float's own value).
    pub fn exp_to_rational(&mut self, x: &BigFloat) -> Rational {
        Self::to_rational(&x.exp(self.p, RM, &mut self.cc))
    }

    /// Evaluates a signed log back to a rational approximation.
    pub fn eval(&mut self, v: &SignedLog) -> Rational {
        let m = self.exp_to_rational(&v.ln_abs);
        if v.negative {
            -m
        } else {
            m
        }
    }

    /// `ln |x|` and the sign of `x` for a nonzero rational.
    pub fn signed_ln(&mut self, x: &Rational) -> SignedLog {
        SignedLog { negative: x.is_negative(), ln_abs: self.ln(&x.abs()) }
    }

    /// Bernoulli numbers `B_0..=B_n` (with `B_1 = -1/2`).
    fn bernoulli(&mut self, n: usize) -> &[Rational] {
        while self.bernoulli.len() <= n {
            let m = self.bernoulli.len();
            let value = if m == 0 {
                Rational::one()
            } else {
                // sum_{k=0}^{m} C(m+1, k) B_k = 0
                let mut acc = Rational::zero();
                let mut c = BigInt::one();
                for (k, b) in self.bernoulli.iter().enumerate() {
                    acc += Rational::from_integer(c.clone()) * b;
                    c = c * (m + 1 - k) / (k + 1);
                }
                -acc / int(m as i64 + 1)
            };
            self.bernoulli.push(value);
        }
        &self.bernoulli[..=n]
    }

    /// Argument above which the asymptotic series are used.
    fn threshold(&self) -> i64 {
        (self.p as f64 * 0.12).ceil() as i64 + 8
    }

    /// `sum_{k>=1} coeff(k, B) / z^(2k - 2 + start)`, stopped once the terms
    /// drop below the working precision or start to grow.
    fn asymptotic_tail(
        &mut self,
        z: &Rational,
        start: usize,
        coeff: fn(usize, &[Rational]) -> Rational,
    ) -> BigFloat {
        let zf = self.from_rational(z);
        let z2 = zf.mul(&zf, self.p, RM);
        let mut zpow = zf.powi(start, self.p, RM);
        let mut acc = self.zero();
        let eps_exp = -(self.p as i32) - 8;
        let mut prev_exp = i32::MAX;
        for k in 1..4 * self.p {
            let c = coeff(k, self.bernoulli(2 * k + 2));
            let term = self.from_rational(&c).div(&zpow, self.p, RM);
            let e = term.exponent().unwrap_or(i32::MIN);
            if term.is_zero() || e < eps_exp || e > prev_exp {
                break;
            }
            prev_exp = e;
            acc = acc.add(&term, self.p, RM);
            zpow = zpow.mul(&z2, self.p, RM);
        }
        acc
    }

    /// `ln Gamma(z)` by Stirling's series, for `z` at or above the threshold.
    fn ln_gamma_large(&mut self, z: &Rational) -> BigFloat {
        let ln_z = self.ln(z);
        let two_pi = self.cc.pi(self.p, RM).mul(&BigFloat::from_word(2, self.p), self.p, RM);
        let half_ln_two_pi = two_pi.ln(self.p, RM, &mut self.cc).div(&BigFloat::from_word(2, self.p), self.p, RM);
        let lead = self.scale(&ln_z, &(z - Rational::new(1.into(), 2.into())));
        let lead = self.sub(&lead, &self.from_rational(z));
        let lead = self.add(&lead, &half_ln_two_pi);
        // B_2k / (2k (2k - 1) z^(2k - 1))
        let tail = self.asymptotic_tail(z, 1, |k, b| &b[2 * k] / int((2 * k * (2 * k - 1)) as i64));
        self.add(&lead, &tail)
    }

    /// `ln |Gamma(x)|` and the sign of `Gamma(x)`; `None` at the poles.
    pub fn ln_gamma(&mut self, x: &Rational) -> Option<SignedLog> {
        if x.is_integer() && !x.is_positive() {
            return None;
        }
        let threshold = self.threshold();
        let shift = if *x >= int(threshold) {
            0
        } else {
            (int(threshold) - x).ceil().to_integer().to_usize().expect("small shift")
        };
        // Gamma(x) = Gamma(x + N) / (x)_N
        let lifted = x + int(shift as i64);
        let big = self.ln_gamma_large(&lifted);
        let poch = pochhammer(x, shift);
        let ln_poch = self.ln(&poch.abs());
        Some(SignedLog { negative: poch.is_negative(), ln_abs: self.sub(&big, &ln_poch) })
    }

    /// `ln G(z + 1)` minus its additive constant, for large `z`.
    fn ln_barnes_g_asymptotic(&mut self, z: &Rational) -> BigFloat {
        let ln_z = self.ln(z);
        let z2 = z * z;
        let half = Rational::new(1.into(), 2.into());
        let mut acc = self.scale(&ln_z, &(&z2 * &half - Rational::new(1.into(), 12.into())));
        acc = self.sub(&acc, &self.from_rational(&(z2 * Rational::new(3.into(), 4.into()))));
        let two_pi = self.cc.pi(self.p, RM).mul(&BigFloat::from_word(2, self.p), self.p, RM);
        let ln_two_pi = two_pi.ln(self.p, RM, &mut self.cc);
        acc = self.add(&acc, &self.scale(&ln_two_pi, &(z * half)));
        // B_(2k+2) / (4k (k+1) z^(2k))
        let tail = self.asymptotic_tail(z, 2, |k, b| &b[2 * k + 2] / int((4 * k * (k + 1)) as i64));
        self.add(&acc, &tail)
    }

    /// Additive constant of the Barnes G expansion, fixed by `G(M + 1) = 0! 1! ... (M-1)!`.
    fn barnes_constant(&mut self) -> BigFloat {
        if let Some(c) = &self.g_constant {
            return c.clone();
        }
        let m = self.threshold() as usize;
        let superfactorial: BigInt = (0..m).map(factorial).product();
        let exact = self.ln(&Rational::from_integer(superfactorial));
        let approx = self.ln_barnes_g_asymptotic(&int(m as i64));
        let c = self.sub(&exact, &approx);
        self.g_constant = Some(c.clone());
        c
    }

    /// `ln |G(x)|` and the sign of `G(x)`; `None` at the zeros `x = 0, -1, -2, ...`.
    pub fn ln_barnes_g(&mut self, x: &Rational) -> Option<SignedLog> {
        if x.is_integer() && !x.is_positive() {
            return None;
        }
        let threshold = self.threshold();
        let shift = if *x >= int(threshold + 1) {
            0
        } else {
            (int(threshold + 1) - x).ceil().to_integer().to_usize().expect("small shift")
        };
        // G(y) = G(x) prod_{j<N} Gamma(x + j) with y = x + N, and
        // Gamma(x + j) = Gamma(y) / (x + j)_{N - j}
        let y = x + int(shift as i64);
        let constant = self.barnes_constant();
        let mut ln_g = self.ln_barnes_g_asymptotic(&(&y - Rational::one()));
        ln_g = self.add(&ln_g, &constant);
        let mut denom = Rational::one();
        for j in 0..shift {
            denom *= pochhammer(&(x + int(j as i64)), shift - j);
        }
        if shift > 0 {
            let ln_gamma_y = self.ln_gamma_large(&y);
            let n_ln_gamma = self.scale(&ln_gamma_y, &int(shift as i64));
            ln_g = self.sub(&ln_g, &n_ln_gamma);
            let ln_denom = self.ln(&denom.abs());
            ln_g = self.add(&ln_g, &ln_denom);
        }
        Some(SignedLog { negative: denom.is_negative(), ln_abs: ln_g })
    }
}

/// Sum of signed logs as a product: signs multiply, logs add.
pub fn product(ctx: &Precise, factors: &[SignedLog]) -> SignedLog {
    let mut negative = false;
    let mut ln_abs = ctx.zero();
    for f in factors {
        negative ^= f.negative;
        ln_abs = ctx.add(&ln_abs, &f.ln_abs);
    }
    SignedLog { negative, ln_abs }
}

/// Reciprocal of a signed log.
pub fn recip(v: &SignedLog) -> SignedLog {
    SignedLog { negative: v.negative, ln_abs: v.ln_abs.neg() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{parse_decimal, ratio};

    fn close(a: &Rational, b: &Rational, digits: i32) -> bool {
        let tol = Rational::new(1.into(), num_traits::pow(BigInt::from(10), digits as usize));
        let diff = (a - b).abs();
        diff <= tol * b.abs()
    }

    #[test]
    fn rational_round_trip() {
        let ctx = Precise::new(30).unwrap();
        for r in [ratio(1, 2), ratio(-7, 4), int(3), ratio(123456789, 1024)] {
            assert_eq!(Precise::to_rational(&ctx.from_rational(&r)), r);
        }
        let third = Precise::to_rational(&ctx.from_rational(&ratio(1, 3)));
        assert!(close(&third, &ratio(1, 3), 40));
    }

    #[test]
    fn gamma_half_is_root_pi() {
        let mut ctx = Precise::new(30).unwrap();
        let g = ctx.ln_gamma(&ratio(1, 2)).unwrap();
        let v = ctx.eval(&g);
        let expected = parse_decimal("1.772453850905516027298167483341145182798").unwrap();
        assert!(close(&v, &expected, 32));
        assert_eq!(to_decimal_string(&v, 20), "1.7724538509055160273");
    }

    #[test]
    fn gamma_at_integers_is_factorial() {
        let mut ctx = Precise::new(30).unwrap();
        for n in [1i64, 2, 5, 10, 40, 75] {
            let g = ctx.ln_gamma(&int(n)).unwrap();
            let expected = Rational::from_integer(factorial((n - 1) as usize));
            assert!(close(&ctx.eval(&g), &expected, 30), "Gamma({n})");
        }
    }

    #[test]
    fn gamma_sign_and_poles() {
        let mut ctx = Precise::new(25).unwrap();
        assert!(ctx.ln_gamma(&int(0)).is_none());
        assert!(ctx.ln_gamma(&int(-3)).is_none());
        // Gamma(-1/2) = -2 sqrt(pi)
        let g = ctx.ln_gamma(&ratio(-1, 2)).unwrap();
        assert!(g.negative);
        let expected = parse_decimal("-3.544907701811032054596334966682290365595").unwrap();
        assert!(close(&ctx.eval(&g), &expected, 25));
    }

    #[test]
    fn barnes_g_values() {
        let mut ctx = Precise::new(30).unwrap();
        for n in 1..=8i64 {
            let g = ctx.ln_barnes_g(&int(n)).unwrap();
            let expected = crate::special::barnes_g_int(n).unwrap();
            assert!(close(&ctx.eval(&g), &expected, 30), "G({n})");
        }
        assert!(ctx.ln_barnes_g(&int(0)).is_none());
        assert!(ctx.ln_barnes_g(&int(-2)).is_none());
        // reference values from mpmath.barnesg
        let g = ctx.ln_barnes_g(&ratio(1, 2)).unwrap();
        let expected = parse_decimal("0.6032442812094462061914292").unwrap();
        assert!(close(&ctx.eval(&g), &expected, 24));
        let g = ctx.ln_barnes_g(&ratio(7, 3)).unwrap();
        let expected = parse_decimal("0.9570827355596445111387029").unwrap();
        assert!(close(&ctx.eval(&g), &expected, 24));
    }

    #[test]
    fn barnes_g_recurrence_at_negative_argument() {
        // G(x + 1) = Gamma(x) G(x)
        let mut ctx = Precise::new(25).unwrap();
        let x = ratio(-5, 4);
        let gx = ctx.ln_barnes_g(&x).unwrap();
        let gx1 = ctx.ln_barnes_g(&(&x + int(1))).unwrap();
        let gamma = ctx.ln_gamma(&x).unwrap();
        let lhs = ctx.eval(&gx1);
        let rhs = ctx.eval(&product(&ctx, &[gamma, gx]));
        assert!(close(&lhs, &rhs, 24));
    }
}
