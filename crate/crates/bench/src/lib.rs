//! Shared inputs for the criterion benches.

use lifequant::{reference_grid, reference_sets, DistributionSpec, FamilyId};

/// First reference set of `family`.
pub fn first_set(family: FamilyId) -> DistributionSpec {
    *reference_sets()
        .iter()
        .find(|s| s.family() == family)
        .expect("every family has reference sets")
}

/// The 201-point probability grid.
pub fn grid() -> Vec<f64> {
    reference_grid()
}
