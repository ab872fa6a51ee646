//! The five classical weight families and their parameters.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{int, ratio, to_fraction_string, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Weight `exp(-x^2)` on the real line.
    Hermite,
    /// Weight `x^alpha exp(-x)` on `[0, inf)`.
    Laguerre,
    /// Weight `(1 - x^2)^(lambda - 1/2)` on `[-1, 1]`.
    Gegenbauer,
    /// Weight `(1 - x)^alpha (1 + x)^beta` on `[-1, 1]`, basis anchored at 0.
    Jacobi,
    /// Same weight as [`Family::Jacobi`], basis built from powers of `x - 1`.
    ShiftedJacobi,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Hermite,
        Family::Laguerre,
        Family::Gegenbauer,
        Family::Jacobi,
        Family::ShiftedJacobi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hermite => "hermite",
            Family::Laguerre => "laguerre",
            Family::Gegenbauer => "gegenbauer",
            Family::Jacobi => "jacobi",
            Family::ShiftedJacobi => "jacobi-shifted",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidFamilySpec(format!("unknown family {s:?}")))
    }
}

/// Parameters of a validated family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Params {
    Hermite,
    Laguerre { alpha: Rational },
    Gegenbauer { lambda: Rational },
    Jacobi { alpha: Rational, beta: Rational },
    ShiftedJacobi { alpha: Rational, beta: Rational },
}

/// A family together with parameters inside its validity region.
///
/// Only the constructors can build one, so every `FamilySpec` in circulation
/// satisfies `alpha > -1`, `beta > -1`, `lambda > -1/2` and `lambda != 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    params: Params,
}

fn check_alpha(name: &str, value: &Rational) -> Result<()> {
    if *value > int(-1) {
        Ok(())
    } else {
        Err(Error::InvalidFamilySpec(format!("{name} must be > -1")))
    }
}

impl FamilySpec {
    pub fn hermite() -> Self {
        FamilySpec { params: Params::Hermite }
    }

    pub fn laguerre(alpha: Rational) -> Result<Self> {
        check_alpha("alpha", &alpha)?;
        Ok(FamilySpec { params: Params::Laguerre { alpha } })
    }

    pub fn gegenbauer(lambda: Rational) -> Result<Self> {
        if lambda <= ratio(-1, 2) || lambda.is_zero() {
            return Err(Error::InvalidFamilySpec("lambda must be > -1/2 and nonzero".into()));
        }
        Ok(FamilySpec { params: Params::Gegenbauer { lambda } })
    }

    pub fn jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        check_alpha("alpha", &alpha)?;
        check_alpha("beta", &beta)?;
        Ok(FamilySpec { params: Params::Jacobi { alpha, beta } })
    }

    pub fn shifted_jacobi(alpha: Rational, beta: Rational) -> Result<Self> {
        check_alpha("alpha", &alpha)?;
        check_alpha("beta", &beta)?;
        Ok(FamilySpec { params: Params::ShiftedJacobi { alpha, beta } })
    }

    /// Builds a spec from optional parameters, rejecting missing required
    /// parameters and parameters the family does not take.
    pub fn from_parts(
        family: Family,
        alpha: Option<Rational>,
        beta: Option<Rational>,
        lambda: Option<Rational>,
    ) -> Result<Self> {
        let takes = |alpha_ok: bool, beta_ok: bool, lambda_ok: bool| -> Result<()> {
            for (present, allowed, name) in [
                (alpha.is_some(), alpha_ok, "alpha"),
                (beta.is_some(), beta_ok, "beta"),
                (lambda.is_some(), lambda_ok, "lambda"),
            ] {
                if present && !allowed {
                    return Err(Error::InvalidFamilySpec(format!("{family} takes no {name}")));
                }
            }
            Ok(())
        };
        let require = |value: Option<Rational>, name: &str| {
            value.ok_or_else(|| Error::InvalidFamilySpec(format!("{family} requires {name}")))
        };
        match family {
            Family::Hermite => {
                takes(false, false, false)?;
                Ok(Self::hermite())
            }
            Family::Laguerre => {
                takes(true, false, false)?;
                Self::laguerre(require(alpha, "alpha")?)
            }
            Family::Gegenbauer => {
                takes(false, false, true)?;
                Self::gegenbauer(require(lambda, "lambda")?)
            }
            Family::Jacobi | Family::ShiftedJacobi => {
                takes(true, true, false)?;
                let (a, b) = (require(alpha, "alpha")?, require(beta, "beta")?);
                if family == Family::Jacobi {
                    Self::jacobi(a, b)
                } else {
                    Self::shifted_jacobi(a, b)
                }
            }
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn family(&self) -> Family {
        match self.params {
            Params::Hermite => Family::Hermite,
            Params::Laguerre { .. } => Family::Laguerre,
            Params::Gegenbauer { .. } => Family::Gegenbauer,
            Params::Jacobi { .. } => Family::Jacobi,
            Params::ShiftedJacobi { .. } => Family::ShiftedJacobi,
        }
    }

    /// Named parameters in a fixed order, for display and serialization.
    pub fn named_params(&self) -> Vec<(&'static str, &Rational)> {
        match &self.params {
            Params::Hermite => vec![],
            Params::Laguerre { alpha } => vec![("alpha", alpha)],
            Params::Gegenbauer { lambda } => vec![("lambda", lambda)],
            Params::Jacobi { alpha, beta } | Params::ShiftedJacobi { alpha, beta } => {
                vec![("alpha", alpha), ("beta", beta)]
            }
        }
    }

    /// Point at which the Taylor-coefficient functionals act: 1 for the
    /// shifted Jacobi basis, 0 otherwise.
    pub fn anchor(&self) -> Rational {
        match self.params {
            Params::ShiftedJacobi { .. } => Rational::one(),
            _ => Rational::zero(),
        }
    }

    /// Scale `c` of the Gram basis `b_k = (c (x - anchor))^k`.
    ///
    /// The moment matrices are Gram matrices of this basis: plain monomials for
    /// Hermite, Laguerre and Gegenbauer, `(-x)^k` for Jacobi and `((1-x)/2)^k`
    /// for shifted Jacobi. The last two choices make the matrices the bare
    /// `2F1(-i-j, beta+1; alpha+beta+2; 2)` Hankel matrix and the generalized
    /// Hilbert matrix `(alpha+1)_{i+j} / (alpha+beta+2)_{i+j}` respectively.
    pub fn basis_scale(&self) -> Rational {
        match self.params {
            Params::Jacobi { .. } => int(-1),
            Params::ShiftedJacobi { .. } => ratio(-1, 2),
            _ => Rational::one(),
        }
    }

    /// Gram-basis variable `c (x - anchor)` for a point `x` on the real line.
    pub fn to_basis_variable(&self, x: &Rational) -> Rational {
        self.basis_scale() * (x - self.anchor())
    }

    /// Same family with every parameter raised by `shift`
    /// (`alpha -> alpha + i`, `beta -> beta + i`, `lambda -> lambda + i`).
    ///
    /// Raising keeps the spec valid: all bounds are lower bounds, and a
    /// negative `lambda` with a positive shift stays clear of zero because
    /// `lambda > -1/2`.
    pub fn shifted(&self, shift: usize) -> Self {
        let s = int(shift as i64);
        let params = match &self.params {
            Params::Hermite => Params::Hermite,
            Params::Laguerre { alpha } => Params::Laguerre { alpha: alpha + &s },
            Params::Gegenbauer { lambda } => Params::Gegenbauer { lambda: lambda + &s },
            Params::Jacobi { alpha, beta } => Params::Jacobi { alpha: alpha + &s, beta: beta + &s },
            Params::ShiftedJacobi { alpha, beta } => {
                Params::ShiftedJacobi { alpha: alpha + &s, beta: beta + &s }
            }
        };
        FamilySpec { params }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family())?;
        let params = self.named_params();
        if !params.is_empty() {
            let body: Vec<String> = params
                .iter()
                .map(|(name, v)| format!("{name}={}", to_fraction_string(v)))
                .collect();
            write!(f, "({})", body.join(", "))?;
        }
        Ok(())
    }
}
