//! Shared inputs for the benchmarks.

use hankel_core::rational::{int, ratio};
use hankel_core::FamilySpec;

/// One representative parameter point per family.
pub fn representative_specs() -> Vec<FamilySpec> {
    vec![
        FamilySpec::hermite(),
        FamilySpec::laguerre(ratio(7, 3)).expect("valid"),
        FamilySpec::gegenbauer(ratio(3, 2)).expect("valid"),
        FamilySpec::jacobi(ratio(1, 3), ratio(1, 5)).expect("valid"),
        FamilySpec::shifted_jacobi(int(2), int(3)).expect("valid"),
    ]
}
