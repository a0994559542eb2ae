//! Lifetime-distribution quantiles built on the Lambert W function.
//!
//! ```
//! use lifequant::{validate, FamilyId};
//!
//! let spec = validate(FamilyId::LaiWeibull3, &[("a", 1.0), ("b", 1.0), ("c", 1.0)]).unwrap();
//! let q = spec.quantile(0.5).unwrap();
//! assert!(q.roundtrip_residual < 1e-12);
//! ```

// `!(x > 0.0)` style checks are used on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod distributions;
pub mod error;
pub mod lambert_w;
pub mod sampler;
pub mod special;

pub use distributions::{
    default_verification_grid, errata_report, reference_grid, reference_sets, validate, verify_family,
    wl_hazard, DistributionSpec, ErrataEntry, ErrataReport, FamilyId, FormulaStatus, HazardShape,
    QuantilePath, QuantileResult, Support, Verdict,
};
pub use error::{Error, Result};
pub use lambert_w::{w_lower, w_principal, BranchId, WEvaluation};
pub use sampler::{sample, SampleBatch, SampleMethod, SeededStream};
