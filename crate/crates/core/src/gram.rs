//! Orthogonalization over a moment functional and the kernel-polynomial
//! route to the inverse Gram matrix.
//!
//! Everything here runs against the family's Gram basis `b_k = (c (x - a))^k`
//! (see [`FamilySpec::basis_scale`]), in which the inner product of `b_i` and
//! `b_j` is the Hankel entry `h[i + j]`. Orthogonalizing `b_0, ..., b_n` gives
//! monic polynomials `q_m` with norms `h_m`; the orthonormal polynomials are
//! `q_m / sqrt(h_m)`. Square roots never need to be taken: the kernel
//! `k_n(x, y) = sum_m q_m(x) q_m(y) / h_m` is rational, its coefficient
//! matrix in the Gram basis is the inverse of the Gram matrix, and the Gram
//! determinant is the product of the norms.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::family::{FamilySpec, Params};
use crate::matrix::ExactMatrix;
use crate::opoly::PolyCoeffs;
use crate::rational::{int, ratio, Rational};
use crate::special::{hyp_terminating, pochhammer};

/// k-th moment of the normalized weight in the natural basis, `E[(x - a)^k]`.
pub fn moment(spec: &FamilySpec, k: usize) -> Rational {
    match spec.params() {
        Params::Hermite => {
            if k % 2 == 1 {
                Rational::zero()
            } else {
                pochhammer(&ratio(1, 2), k / 2)
            }
        }
        Params::Laguerre { alpha } => pochhammer(&(alpha + Rational::one()), k),
        Params::Gegenbauer { lambda } => {
            if k % 2 == 1 {
                Rational::zero()
            } else {
                let m = k / 2;
                pochhammer(&ratio(1, 2), m) / pochhammer(&(lambda + Rational::one()), m)
            }
        }
        Params::Jacobi { alpha, beta } => {
            let lower = alpha + beta + int(2);
            let f = hyp_terminating(k, &[beta + Rational::one()], &[lower], &int(2))
                .expect("alpha + beta + 2 > 0");
            if k % 2 == 0 {
                f
            } else {
                -f
            }
        }
        Params::ShiftedJacobi { alpha, beta } => {
            let lower = alpha + beta + int(2);
            num_traits::pow(int(-2), k) * pochhammer(&(alpha + Rational::one()), k)
                / pochhammer(&lower, k)
        }
    }
}

/// Inner product `<b_0, b_k>` of the Gram basis: `c^k` times [`moment`].
pub fn hankel_entry(spec: &FamilySpec, k: usize) -> Rational {
    num_traits::pow(spec.basis_scale(), k) * moment(spec, k)
}

fn hankel_sequence(spec: &FamilySpec, len: usize) -> Vec<Rational> {
    (0..len).map(|k| hankel_entry(spec, k)).collect()
}

/// The `(n+1) x (n+1)` Gram matrix of `b_0, ..., b_n`. Its `(0, 0)` entry is 1.
pub fn moment_matrix(spec: &FamilySpec, n: usize) -> ExactMatrix {
    ExactMatrix::hankel(&hankel_sequence(spec, 2 * n + 1), n + 1)
}

/// Monic orthogonal polynomials and their norms, degrees `0..=n`, with
/// coefficients in the Gram basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoTable {
    spec: FamilySpec,
    monic: Vec<PolyCoeffs>,
    norms: Vec<Rational>,
}

impl OrthoTable {
    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    /// Highest degree in the table.
    pub fn n(&self) -> usize {
        self.monic.len() - 1
    }

    pub fn monic(&self) -> &[PolyCoeffs] {
        &self.monic
    }

    pub fn norms(&self) -> &[Rational] {
        &self.norms
    }
}

/// Inner product of two coefficient vectors under the Hankel functional.
fn hankel_inner(a: &[Rational], b: &[Rational], seq: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for (i, ai) in a.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            acc += ai * bj * &seq[i + j];
        }
    }
    acc
}

/// Classical Gram-Schmidt over a Hankel functional, `seq` holding at least
/// `2n + 1` terms.
pub(crate) fn orthogonalize(seq: &[Rational], n: usize) -> Result<(Vec<PolyCoeffs>, Vec<Rational>)> {
    let mut monic: Vec<PolyCoeffs> = Vec::with_capacity(n + 1);
    let mut norms: Vec<Rational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let mut basis = vec![Rational::zero(); m + 1];
        basis[m] = Rational::one();
        let mut q = basis.clone();
        for (prev, h) in monic.iter().zip(&norms) {
            let proj = hankel_inner(&basis, prev.coeffs(), seq) / h;
            if proj.is_zero() {
                continue;
            }
            for (qi, pi) in q.iter_mut().zip(prev.coeffs()) {
                *qi -= &proj * pi;
            }
        }
        let norm = hankel_inner(&q, &q, seq);
        if !norm.is_positive() {
            return Err(Error::NotPositiveDefinite { degree: m, norm });
        }
        monic.push(PolyCoeffs::new_unchecked(q));
        norms.push(norm);
    }
    Ok((monic, norms))
}

/// Orthogonalizes `b_0, ..., b_n` under the family's normalized moment functional.
pub fn gram_schmidt(spec: &FamilySpec, n: usize) -> Result<OrthoTable> {
    let seq = hankel_sequence(spec, 2 * n + 1);
    let (monic, norms) = orthogonalize(&seq, n)?;
    Ok(OrthoTable { spec: spec.clone(), monic, norms })
}

/// Coefficient matrix of the kernel polynomial in the Gram basis:
/// `B(j, k) = sum_m q_m[j] q_m[k] / h_m`. This is the inverse of the moment matrix.
pub fn kernel_inverse(table: &OrthoTable) -> ExactMatrix {
    let dim = table.n() + 1;
    let mut out = ExactMatrix::zeros(dim);
    for (q, h) in table.monic.iter().zip(&table.norms) {
        let c = q.coeffs();
        for j in 0..c.len() {
            if c[j].is_zero() {
                continue;
            }
            let cj = &c[j] / h;
            for k in j..c.len() {
                out[(j, k)] += &cj * &c[k];
            }
        }
    }
    for j in 0..dim {
        for k in 0..j {
            out[(j, k)] = out[(k, j)].clone();
        }
    }
    out
}

/// `k_n(x, y)` at two points of the real line.
pub fn kernel_eval(table: &OrthoTable, x: &Rational, y: &Rational) -> Rational {
    let s = table.spec.to_basis_variable(x);
    let t = table.spec.to_basis_variable(y);
    table
        .monic
        .iter()
        .zip(&table.norms)
        .map(|(q, h)| q.eval(&s) * q.eval(&t) / h)
        .sum()
}

/// `k_n(x, y) = sum_{j,k} B(j, k) b_j(x) b_k(y)` from any inverse `B` of the
/// moment matrix.
pub fn kernel_from_inverse(spec: &FamilySpec, inverse: &ExactMatrix, x: &Rational, y: &Rational) -> Rational {
    let powers = |v: &Rational| -> Vec<Rational> {
        let s = spec.to_basis_variable(v);
        let mut acc = Rational::one();
        (0..inverse.dim())
            .map(|_| {
                let out = acc.clone();
                acc *= &s;
                out
            })
            .collect()
    };
    let (px, py) = (powers(x), powers(y));
    inverse.iter().map(|((j, k), b)| b * &px[j] * &py[k]).sum()
}

/// Determinant of the moment matrix as the product of the monic norms.
pub fn det_from_norms(table: &OrthoTable) -> Rational {
    table.norms.iter().product()
}
