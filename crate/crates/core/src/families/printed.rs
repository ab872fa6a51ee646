//! The Barnes G expression printed for the determinant of the Jacobi
//! `2F1` Hankel matrix, evaluated literally in floating point and set against
//! the exact determinant.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec, Params};
use crate::gram::moment_matrix;
use crate::oracle::bareiss_det;
use crate::precise::{Approx, Precise, SignedLog};
use crate::rational::{int, ratio, to_fraction_string, Rational};
use crate::special::pochhammer;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Match,
    Mismatch,
    /// The printed expression has a pole or a 0/0 at these parameters.
    Undefined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Undefined => "undefined",
        })
    }
}

/// Outcome of evaluating the printed determinant formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedComparison {
    pub spec: FamilySpec,
    pub n: usize,
    pub digits: usize,
    /// `None` when the expression is undefined.
    pub printed: Option<Approx>,
    /// Determinant of the matrix by fraction-free elimination.
    pub exact: Rational,
    pub relative_difference: Option<Approx>,
    /// `10^(-digits/2)`.
    pub tolerance: Rational,
    pub verdict: Verdict,
}

impl fmt::Display for PrintedComparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exact = Approx { value: self.exact.clone(), digits: self.digits };
        let show = |v: &Option<Approx>| v.as_ref().map_or("undefined".to_string(), Approx::to_string);
        writeln!(f, "family: {}", self.spec)?;
        writeln!(f, "n: {}", self.n)?;
        writeln!(f, "printed formula: {}", show(&self.printed))?;
        writeln!(f, "exact determinant: {} = {}", to_fraction_string(&self.exact), exact)?;
        writeln!(f, "relative difference: {}", show(&self.relative_difference))?;
        writeln!(f, "tolerance: {}", Approx { value: self.tolerance.clone(), digits: 1 })?;
        writeln!(f, "verdict: {}", self.verdict)
    }
}

enum Factor {
    Finite(SignedLog),
    Zero,
    Infinite,
}

impl Factor {
    fn recip(self) -> Factor {
        match self {
            Factor::Finite(v) => Factor::Finite(crate::precise::recip(&v)),
            Factor::Zero => Factor::Infinite,
            Factor::Infinite => Factor::Zero,
        }
    }

    fn pow(self, k: usize) -> Vec<Factor> {
        match self {
            Factor::Finite(v) => (0..k).map(|_| Factor::Finite(v.clone())).collect(),
            other => vec![other],
        }
    }
}

fn barnes(ctx: &mut Precise, x: &Rational) -> Factor {
    ctx.ln_barnes_g(x).map_or(Factor::Zero, Factor::Finite)
}

fn gamma(ctx: &mut Precise, x: &Rational) -> Factor {
    ctx.ln_gamma(x).map_or(Factor::Infinite, Factor::Finite)
}

fn rational(ctx: &mut Precise, x: &Rational) -> Factor {
    if x.is_zero() {
        Factor::Zero
    } else {
        Factor::Finite(ctx.signed_ln(x))
    }
}

/// Literal value of the printed right-hand side, `None` where it is undefined.
fn printed_value(ctx: &mut Precise, alpha: &Rational, beta: &Rational, n: usize) -> Option<Rational> {
    let s = alpha + beta + Rational::one();
    let nq = int(n as i64);
    let half = ratio(1, 2);
    let m = n + 1;
    let mut factors: Vec<Factor> = Vec::new();

    // (Gamma(s) 2^-(2 alpha + 2 beta + n + 1) pi / (Gamma(s) Gamma(s)))^(n+1)
    factors.extend(gamma(ctx, &s).pow(m));
    factors.extend(gamma(ctx, &s).recip().pow(2 * m));
    let ln2 = ctx.ln_two();
    let exponent = -(alpha * int(2) + beta * int(2) + &nq + int(1)) * int(m as i64);
    factors.push(Factor::Finite(SignedLog { negative: false, ln_abs: ctx.scale(&ln2, &exponent) }));
    let ln_pi = ctx.ln_pi();
    factors.push(Factor::Finite(SignedLog { negative: false, ln_abs: ctx.scale(&ln_pi, &int(m as i64)) }));

    // G(n+2) G(s/2)^2 G((s+1)/2)^2 / (G((s+2)/2 + n)^2 G((s+3)/2 + n)^2)
    factors.push(barnes(ctx, &(&nq + int(2))));
    factors.extend(barnes(ctx, &(&s * &half)).pow(2));
    factors.extend(barnes(ctx, &((&s + int(1)) * &half)).pow(2));
    factors.extend(barnes(ctx, &((&s + int(2)) * &half + &nq)).recip().pow(2));
    factors.extend(barnes(ctx, &((&s + int(3)) * &half + &nq)).recip().pow(2));

    // G(s+n+1) G(alpha+n+2) G(beta+n+2) / ((s/2)_(n+1) G(s) G(alpha+1) G(beta+1))
    factors.push(barnes(ctx, &(&s + &nq + int(1))));
    factors.push(barnes(ctx, &(alpha + &nq + int(2))));
    factors.push(barnes(ctx, &(beta + &nq + int(2))));
    factors.push(rational(ctx, &pochhammer(&(&s * &half), m)).recip());
    factors.push(barnes(ctx, &s).recip());
    factors.push(barnes(ctx, &(alpha + int(1))).recip());
    factors.push(barnes(ctx, &(beta + int(1))).recip());

    if factors.iter().any(|f| matches!(f, Factor::Infinite)) {
        return None;
    }
    if factors.iter().any(|f| matches!(f, Factor::Zero)) {
        return Some(Rational::zero());
    }
    let logs: Vec<SignedLog> = factors
        .into_iter()
        .map(|f| match f {
            Factor::Finite(v) => v,
            _ => unreachable!(),
        })
        .collect();
    let total = crate::precise::product(ctx, &logs);
    Some(ctx.eval(&total))
}

/// Evaluates the printed determinant formula for the Jacobi `2F1` matrix
/// with `digits` significant digits and compares it with the exact
/// determinant. Agreement means relative difference at most `10^(-digits/2)`.
/// Never fails on disagreement; only non-Jacobi specs are rejected.
pub fn as_printed_jacobi_det(spec: &FamilySpec, n: usize, digits: usize) -> Result<PrintedComparison> {
    let Params::Jacobi { alpha, beta } = spec.params() else {
        return Err(Error::InvalidFamilySpec(format!(
            "the printed determinant applies to {} only, got {}",
            Family::Jacobi,
            spec.family()
        )));
    };
    let mut ctx = Precise::new(digits + 10)?;
    let exact = bareiss_det(&moment_matrix(spec, n));
    let printed = printed_value(&mut ctx, alpha, beta, n);
    let tolerance = Rational::new(
        BigInt::one(),
        num_traits::pow(BigInt::from(10), (digits / 2).max(1)),
    );
    let relative = printed.as_ref().map(|p| ((p - &exact) / &exact).abs());
    let verdict = match &relative {
        None => Verdict::Undefined,
        Some(r) if *r <= tolerance => Verdict::Match,
        Some(_) => Verdict::Mismatch,
    };
    Ok(PrintedComparison {
        spec: spec.clone(),
        n,
        digits,
        printed: printed.map(|value| Approx { value, digits }),
        exact,
        relative_difference: relative.map(|value| Approx { value, digits: 3 }),
        tolerance,
        verdict,
    })
}
