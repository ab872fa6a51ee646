//! Exact moment (Hankel) matrices of the classical orthogonal-polynomial
//! weights: their determinants and inverses from closed forms, from the
//! kernel polynomial, and from plain elimination.
//!
//! All exact work happens under the weight normalized to total mass 1, where
//! every entry, inverse entry and determinant is rational.
//!
//! ```
//! use hankel_core::{explicit_inverse, moment_matrix, FamilySpec, ExactMatrix};
//! use hankel_core::rational::int;
//!
//! let hilbert = FamilySpec::shifted_jacobi(int(0), int(0)).unwrap();
//! let m = moment_matrix(&hilbert, 3);
//! let inv = explicit_inverse(&hilbert, 3).value;
//! assert_eq!(m.mul(&inv).unwrap(), ExactMatrix::identity(4));
//! ```

pub mod error;
pub mod families;
pub mod family;
pub mod gram;
pub mod matrix;
pub mod opoly;
pub mod oracle;
pub mod precise;
pub mod rational;
pub mod special;

pub use error::{Error, Result};
pub use families::{
    as_printed_jacobi_det, explicit_det, explicit_inverse, unnormalized_scale, ExplicitResult,
    FormulaId, PrintedComparison, Verdict,
};
pub use family::{Family, FamilySpec, Params};
pub use gram::{
    det_from_norms, gram_schmidt, hankel_entry, kernel_eval, kernel_from_inverse, kernel_inverse,
    moment, moment_matrix, OrthoTable,
};
pub use matrix::ExactMatrix;
pub use opoly::{leading_coefficient, norm_squared, poly_coeffs, special_value, PolyCoeffs};
pub use oracle::{bareiss_det, gauss_inverse, verify, Check, VerifyReport, Witness};
pub use precise::Approx;
pub use rational::Rational;
pub use special::{barnes_g_int, binomial, hyp_terminating, pochhammer};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
