//! Closed-form determinants and inverses of the normalized moment matrices,
//! one module per family, plus the floating-point helpers: the total mass of
//! each weight and the as-printed evaluation of the Barnes G determinant
//! formula for the Jacobi matrix.

mod gegenbauer;
mod hermite;
mod jacobi;
mod laguerre;
mod printed;
mod scale;

use num_traits::Zero;

pub use printed::{as_printed_jacobi_det, PrintedComparison, Verdict};
pub use scale::unnormalized_scale;

use crate::family::{FamilySpec, Params};
use crate::matrix::ExactMatrix;
use crate::rational::Rational;

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FormulaId {
    /// `2^(-n(n+1)/2) G(n+2)`.
    HermiteDeterminant,
    /// Sum over `H_{k-i}(0) H_{k-j}(0)`.
    HermiteInverse,
    /// `G(n+2) prod (alpha+1)_k`.
    LaguerreDeterminant,
    /// Binomial sum over `(alpha+1)_k / k!`.
    LaguerreInverse,
    /// Product form reduced to Pochhammer symbols.
    GegenbauerDeterminant,
    /// Sum over `C^{lambda+i}_{k-i}(0) C^{lambda+j}_{k-j}(0)`.
    GegenbauerInverse,
    /// Product of monic norms of the Jacobi polynomials.
    JacobiDeterminant,
    /// The Barnes G expression for the Jacobi determinant, in floating point.
    JacobiPrintedDeterminant,
    /// Sum over `P^{(alpha+i,beta+i)}_{k-i}(0) P^{(alpha+j,beta+j)}_{k-j}(0)`.
    JacobiInverse,
    /// Generalized Hilbert determinant reduced to Pochhammer symbols.
    ShiftedJacobiDeterminant,
    /// Binomial sum for the generalized Hilbert inverse.
    ShiftedJacobiInverse,
}

/// A value together with the formula that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitResult<T> {
    pub value: T,
    pub formula: FormulaId,
    /// True when the value refers to the weight normalized to total mass 1.
    pub normalized: bool,
}

fn exact<T>(value: T, formula: FormulaId) -> ExplicitResult<T> {
    ExplicitResult { value, formula, normalized: true }
}

/// Determinant of the `(n+1) x (n+1)` normalized moment matrix from its closed form.
pub fn explicit_det(spec: &FamilySpec, n: usize) -> ExplicitResult<Rational> {
    match spec.params() {
        Params::Hermite => exact(hermite::det(n), FormulaId::HermiteDeterminant),
        Params::Laguerre { alpha } => exact(laguerre::det(alpha, n), FormulaId::LaguerreDeterminant),
        Params::Gegenbauer { lambda } => {
            exact(gegenbauer::det(lambda, n), FormulaId::GegenbauerDeterminant)
        }
        Params::Jacobi { alpha, beta } => {
            exact(jacobi::det(alpha, beta, n), FormulaId::JacobiDeterminant)
        }
        Params::ShiftedJacobi { alpha, beta } => {
            exact(jacobi::shifted_det(alpha, beta, n), FormulaId::ShiftedJacobiDeterminant)
        }
    }
}

/// Inverse of the normalized moment matrix from its closed-form sum.
pub fn explicit_inverse(spec: &FamilySpec, n: usize) -> ExplicitResult<ExactMatrix> {
    match spec.params() {
        Params::Hermite => exact(hermite::inverse(spec, n), FormulaId::HermiteInverse),
        Params::Laguerre { alpha } => {
            exact(laguerre::inverse(alpha, n), FormulaId::LaguerreInverse)
        }
        Params::Gegenbauer { lambda } => {
            exact(gegenbauer::inverse(spec, lambda, n), FormulaId::GegenbauerInverse)
        }
        Params::Jacobi { alpha, beta } => {
            exact(jacobi::inverse(spec, alpha, beta, n), FormulaId::JacobiInverse)
        }
        Params::ShiftedJacobi { alpha, beta } => {
            exact(jacobi::shifted_inverse(alpha, beta, n), FormulaId::ShiftedJacobiInverse)
        }
    }
}

/// `entry(i, j) = sum_{k = max(i,j)}^{n} weight(k) factor(k, i) factor(k, j)`,
/// the shape shared by every inverse formula.
fn kernel_sum(
    n: usize,
    weight: impl Fn(usize) -> Rational,
    factor: impl Fn(usize, usize) -> Rational,
) -> ExactMatrix {
    let dim = n + 1;
    let table: Vec<Vec<Rational>> =
        (0..dim).map(|k| (0..=k).map(|i| factor(k, i)).collect()).collect();
    let weights: Vec<Rational> = (0..dim).map(weight).collect();
    let mut out = ExactMatrix::zeros(dim);
    for i in 0..dim {
        for j in i..dim {
            let mut acc = Rational::zero();
            for k in j..dim {
                let (fi, fj) = (&table[k][i], &table[k][j]);
                if !fi.is_zero() && !fj.is_zero() {
                    acc += &weights[k] * fi * fj;
                }
            }
            out[(j, i)] = acc.clone();
            out[(i, j)] = acc;
        }
    }
    out
}
