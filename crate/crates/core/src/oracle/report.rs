use std::fmt;

use num_traits::{One, Zero};

use crate::families::{explicit_det, explicit_inverse};
use crate::family::{FamilySpec, Params};
use crate::gram::{det_from_norms, gram_schmidt, kernel_inverse, moment_matrix};
use crate::matrix::ExactMatrix;
use crate::rational::{to_fraction_string, Rational};

use super::{bareiss_det, gauss_inverse};

/// Where a check failed: the offending entry, if any, and the two values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub entry: Option<(usize, usize)>,
    pub expected: Rational,
    pub actual: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Always present when `passed` is false.
    pub witness: Option<Witness>,
}

impl Check {
    fn pass(name: &str) -> Self {
        Check { name: name.to_string(), passed: true, witness: None }
    }

    fn fail(name: &str, witness: Witness) -> Self {
        Check { name: name.to_string(), passed: false, witness: Some(witness) }
    }

    fn matrices(name: &str, expected: &ExactMatrix, actual: &ExactMatrix) -> Self {
        match expected.first_difference(actual) {
            None => Self::pass(name),
            Some((i, j)) => Self::fail(
                name,
                Witness {
                    entry: Some((i, j)),
                    expected: expected[(i, j)].clone(),
                    actual: actual[(i, j)].clone(),
                },
            ),
        }
    }

    fn scalars(name: &str, expected: &Rational, actual: &Rational) -> Self {
        if expected == actual {
            Self::pass(name)
        } else {
            Self::fail(name, Witness { entry: None, expected: expected.clone(), actual: actual.clone() })
        }
    }

    /// Passes when every listed entry of `m` is zero.
    fn zeros(name: &str, m: &ExactMatrix, positions: impl Iterator<Item = (usize, usize)>) -> Self {
        for (i, j) in positions {
            if !m[(i, j)].is_zero() {
                return Self::fail(
                    name,
                    Witness { entry: Some((i, j)), expected: Rational::zero(), actual: m[(i, j)].clone() },
                );
            }
        }
        Self::pass(name)
    }
}

/// Every cross-check for one family and size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub spec: FamilySpec,
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} n={}", self.spec, self.n)?;
        for c in &self.checks {
            write!(f, "  {} {}", if c.passed { "ok  " } else { "FAIL" }, c.name)?;
            if let Some(w) = &c.witness {
                if let Some((i, j)) = w.entry {
                    write!(f, " at ({i}, {j})")?;
                }
                write!(
                    f,
                    ": expected {}, got {}",
                    to_fraction_string(&w.expected),
                    to_fraction_string(&w.actual)
                )?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Cross-checks the closed forms, the kernel-polynomial engine and plain
/// elimination against each other. Mismatches become failed checks, never
/// panics or errors.
pub fn verify(spec: &FamilySpec, n: usize) -> VerifyReport {
    let dim = n + 1;
    let m = moment_matrix(spec, n);
    let explicit = explicit_inverse(spec, n).value;
    let mut checks = Vec::new();

    let product = m.mul(&explicit).expect("same dimension");
    checks.push(Check::matrices("explicit inverse times matrix is identity", &ExactMatrix::identity(dim), &product));

    let kernel = match gram_schmidt(spec, n) {
        Ok(table) => Some((kernel_inverse(&table), det_from_norms(&table))),
        Err(e) => {
            checks.push(Check::fail(
                "orthogonalization succeeds",
                Witness { entry: None, expected: Rational::one(), actual: error_norm(&e) },
            ));
            None
        }
    };
    let gauss = gauss_inverse(&m);

    if let Some((kinv, _)) = &kernel {
        checks.push(Check::matrices("explicit inverse equals kernel inverse", kinv, &explicit));
    }
    match &gauss {
        Ok(g) => checks.push(Check::matrices("explicit inverse equals elimination inverse", g, &explicit)),
        Err(_) => checks.push(Check::fail(
            "elimination inverse exists",
            Witness { entry: None, expected: Rational::one(), actual: Rational::zero() },
        )),
    }

    let det = explicit_det(spec, n).value;
    let bareiss = bareiss_det(&m);
    checks.push(Check::scalars("explicit determinant equals elimination determinant", &bareiss, &det));
    if let Some((_, norms_det)) = &kernel {
        checks.push(Check::scalars("explicit determinant equals product of norms", &bareiss, norms_det));
    }

    checks.push(match m.asymmetry() {
        None => Check::pass("matrix is symmetric"),
        Some((i, j)) => Check::fail(
            "matrix is symmetric",
            Witness { entry: Some((i, j)), expected: m[(j, i)].clone(), actual: m[(i, j)].clone() },
        ),
    });
    checks.push(match explicit.asymmetry() {
        None => Check::pass("explicit inverse is symmetric"),
        Some((i, j)) => Check::fail(
            "explicit inverse is symmetric",
            Witness {
                entry: Some((i, j)),
                expected: explicit[(j, i)].clone(),
                actual: explicit[(i, j)].clone(),
            },
        ),
    });

    if matches!(spec.params(), Params::Hermite | Params::Gegenbauer { .. }) {
        let odd = || (0..dim).flat_map(move |i| (0..dim).map(move |j| (i, j))).filter(|(i, j)| (i + j) % 2 == 1);
        checks.push(Check::zeros("matrix vanishes at odd i + j", &m, odd()));
        checks.push(Check::zeros("explicit inverse vanishes at odd i + j", &explicit, odd()));
    }

    VerifyReport { spec: spec.clone(), n, checks }
}

fn error_norm(e: &crate::error::Error) -> Rational {
    match e {
        crate::error::Error::NotPositiveDefinite { norm, .. } => norm.clone(),
        _ => Rational::zero(),
    }
}
