use num_traits::One;

use crate::error::Result;
use crate::family::{FamilySpec, Params};
use crate::precise::{product, recip, Approx, Precise, SignedLog};
use crate::rational::{int, ratio, Rational};

fn gamma(ctx: &mut Precise, x: &Rational) -> SignedLog {
    ctx.ln_gamma(x).expect("Gamma is finite at the masses of valid weights")
}

/// `ln` of the total mass of the unnormalized weight.
pub(crate) fn ln_mass(ctx: &mut Precise, spec: &FamilySpec) -> SignedLog {
    let half = ratio(1, 2);
    match spec.params() {
        Params::Hermite => gamma(ctx, &half),
        Params::Laguerre { alpha } => gamma(ctx, &(alpha + Rational::one())),
        Params::Gegenbauer { lambda } => {
            // B(1/2, lambda + 1/2)
            let factors = [
                gamma(ctx, &half),
                gamma(ctx, &(lambda + &half)),
                recip(&gamma(ctx, &(lambda + Rational::one()))),
            ];
            product(ctx, &factors)
        }
        Params::Jacobi { alpha, beta } | Params::ShiftedJacobi { alpha, beta } => {
            // 2^(alpha+beta+1) Gamma(alpha+1) Gamma(beta+1) / Gamma(alpha+beta+2)
            let ln2 = ctx.ln_two();
            let power = SignedLog { negative: false, ln_abs: ctx.scale(&ln2, &(alpha + beta + int(1))) };
            let factors = [
                power,
                gamma(ctx, &(alpha + int(1))),
                gamma(ctx, &(beta + int(1))),
                recip(&gamma(ctx, &(alpha + beta + int(2)))),
            ];
            product(ctx, &factors)
        }
    }
}

/// Total mass of the family's weight, the factor that turns the normalized
/// moment matrix back into the matrix of raw integrals of its basis.
///
/// The returned value is accurate well beyond `digits`; it is shown with
/// `digits` significant digits.
pub fn unnormalized_scale(spec: &FamilySpec, digits: usize) -> Result<Approx> {
    let mut ctx = Precise::new(digits + 10)?;
    let ln = ln_mass(&mut ctx, spec);
    Ok(Approx { value: ctx.eval(&ln), digits })
}
