//! Family registry, survival/CDF evaluation and quantiles.
//!
//! Every family is parameterized by the named reals of its survival function
//! (`a`, `b`, `c`, `d`, `e`, `mu`). A [`DistributionSpec`] is produced by
//! [`validate`] and is immutable afterwards; all evaluation is pure.
//!
//! Quantiles come in two flavours. [`DistributionSpec::quantile`] evaluates a
//! closed-form or principal-branch Lambert-W inverse; it exists for 24 of the
//! 28 families. [`DistributionSpec::numeric_quantile`] inverts the CDF by
//! bracketing and bisection and works for every family. The second one is the
//! oracle the first is tested against.

mod family;
mod fixtures;
pub(crate) mod formulas;
mod hazard;
mod numeric;
mod verify;

use serde::Serialize;

use crate::error::{Error, Result};

pub use family::{FamilyId, FamilyInfo, FormulaStatus};
pub use fixtures::{parse_reference_sets, reference_sets, REFERENCE_FIXTURE};
pub use hazard::{wl_hazard, HazardShape};
pub use verify::{errata_report, verify_family, ErrataEntry, ErrataReport, Verdict};

/// Largest `|F(t) - u|` an analytic quantile may return.
pub const ANALYTIC_TOL: f64 = 1e-9;

/// Maximum number of parameters of any family.
pub const MAX_PARAMS: usize = 5;

/// Provenance of a quantile value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum QuantilePath {
    /// Published inverse, confirmed by the roundtrip harness.
    AnalyticVerified,
    /// Re-derived inverse replacing a published one that fails the roundtrip.
    AnalyticCorrected,
    /// Bracketed bisection on the CDF.
    Numeric,
}

/// A quantile together with how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantileResult {
    pub t: f64,
    pub path: QuantilePath,
    /// `|F(t) - u|`
    pub roundtrip_residual: f64,
}

/// Half-open support `[lo, hi)`; `lo` may be `-inf` only for `trunc_log_weibull`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Support {
    pub lo: f64,
    pub hi: f64,
}

impl Support {
    pub fn contains(&self, t: f64) -> bool {
        t >= self.lo && (t < self.hi || (self.hi.is_infinite() && t.is_finite()))
    }
}

/// A family together with a parameter set that satisfies its constraints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSpec {
    family: FamilyId,
    params: [f64; MAX_PARAMS],
    support: Support,
    max_probability: f64,
}

/// Checks `raw` against the constraints of `family` and builds a spec.
///
/// Every parameter named by the family must be given exactly once; unknown
/// names are rejected.
pub fn validate(family: FamilyId, raw: &[(&str, f64)]) -> Result<DistributionSpec> {
    let names = family.param_names();
    let mut params = [f64::NAN; MAX_PARAMS];
    let mut seen = [false; MAX_PARAMS];
    for &(name, value) in raw {
        let idx = names.iter().position(|n| *n == name).ok_or_else(|| {
            Error::param(
                family,
                format!("unknown parameter `{name}`; expected {}", names.join(", ")),
            )
        })?;
        if seen[idx] {
            return Err(Error::param(family, format!("parameter `{name}` given twice")));
        }
        seen[idx] = true;
        params[idx] = value;
    }
    if let Some(missing) = names.iter().zip(seen).find(|(_, s)| !s).map(|(n, _)| n) {
        return Err(Error::param(family, format!("missing parameter `{missing}`")));
    }
    DistributionSpec::new(family, &params[..names.len()])
}

impl DistributionSpec {
    /// Builds a spec from parameters in the family's declared order.
    pub fn new(family: FamilyId, values: &[f64]) -> Result<Self> {
        let names = family.param_names();
        if values.len() != names.len() {
            return Err(Error::param(
                family,
                format!("expected {} parameters ({}), got {}", names.len(), names.join(", "), values.len()),
            ));
        }
        for (name, v) in names.iter().zip(values) {
            if !v.is_finite() {
                return Err(Error::param(family, format!("{name} must be finite, got {v}")));
            }
        }
        let mut params = [0.0; MAX_PARAMS];
        params[..values.len()].copy_from_slice(values);
        check_constraints(family, &params)?;

        let support = formulas::support(family, &params);
        let max_probability = match family {
            FamilyId::Gompertz2 if params[1] < 0.0 => -(params[0] / params[1]).exp_m1(),
            _ => 1.0,
        };
        let spec = DistributionSpec {
            family,
            params,
            support,
            max_probability,
        };
        spec.check_endpoints()?;
        Ok(spec)
    }

    pub fn family(&self) -> FamilyId {
        self.family
    }

    /// Parameter values in the family's declared order.
    pub fn params(&self) -> &[f64] {
        &self.params[..self.family.param_names().len()]
    }

    pub fn param(&self, name: &str) -> Option<f64> {
        self.family
            .param_names()
            .iter()
            .position(|n| *n == name)
            .map(|i| self.params[i])
    }

    pub fn named_params(&self) -> impl Iterator<Item = (&'static str, f64)> + '_ {
        self.family
            .param_names()
            .iter()
            .copied()
            .zip(self.params.iter().copied())
    }

    pub fn support(&self) -> Support {
        self.support
    }

    /// Supremum of the CDF. Below 1 only for `gompertz2` with `b < 0`,
    /// whose survival function levels off at `exp(a/b)`.
    pub fn max_probability(&self) -> f64 {
        self.max_probability
    }

    /// `P(X > t)`; 1 below the support and 0 at or above its upper end.
    pub fn survival(&self, t: f64) -> f64 {
        if t <= self.support.lo {
            return 1.0;
        }
        if t >= self.support.hi {
            return 0.0;
        }
        formulas::survival(self.family, &self.params, t).clamp(0.0, 1.0)
    }

    /// `P(X <= t) = 1 - survival(t)`.
    pub fn cdf(&self, t: f64) -> f64 {
        1.0 - self.survival(t)
    }

    /// Closed-form or Lambert-W quantile.
    ///
    /// Fails with [`Error::Convergence`] rather than return a value whose
    /// roundtrip residual exceeds [`ANALYTIC_TOL`], unless the CDF jumps over
    /// `u` between `t` and one of its floating-point neighbours (steep CDFs
    /// right at a shifted support end can do this).
    pub fn quantile(&self, u: f64) -> Result<QuantileResult> {
        check_probability(u)?;
        let path = match self.family.status() {
            FormulaStatus::Verified => QuantilePath::AnalyticVerified,
            FormulaStatus::Corrected => QuantilePath::AnalyticCorrected,
            FormulaStatus::NoClosedForm => return Err(Error::NoAnalyticForm(self.family)),
        };
        if u >= self.max_probability {
            return Err(Error::domain(format!(
                "u = {u} is not attained; the CDF of this {} law is bounded by {}",
                self.family, self.max_probability
            )));
        }
        debug_assert!(
            formulas::lambert_argument(self.family, &self.params, u).is_none_or(|x| x >= 0.0),
            "Lambert W argument must be nonnegative"
        );
        let t = formulas::quantile(self.family, &self.params, u);
        if !t.is_finite() {
            return Err(Error::domain(format!("quantile of {} at u = {u} is not finite", self.family)));
        }
        let roundtrip_residual = (self.cdf(t) - u).abs();
        if roundtrip_residual > ANALYTIC_TOL && !self.brackets_within_ulp(t, u) {
            return Err(Error::Convergence {
                residual: roundtrip_residual,
                tol: ANALYTIC_TOL,
            });
        }
        Ok(QuantileResult {
            t,
            path,
            roundtrip_residual,
        })
    }

    /// Inverts the CDF numerically to `|F(t) - u| <= tol`.
    pub fn numeric_quantile(&self, u: f64, tol: f64) -> Result<QuantileResult> {
        numeric::invert_cdf(self, u, tol)
    }

    /// The published inverse evaluated literally, `None` for numeric-only families.
    ///
    /// Used by the verification harness; it may return NaN or values that fail
    /// the roundtrip.
    pub fn published_quantile(&self, u: f64) -> Option<f64> {
        formulas::published_quantile(self.family, &self.params, u)
    }

    /// Argument handed to `W0` by the implemented quantile, when there is one.
    pub fn lambert_argument(&self, u: f64) -> Option<f64> {
        formulas::lambert_argument(self.family, &self.params, u)
    }

    /// Whether `u` lies between the CDF at the neighbours of `t`, i.e. no
    /// double lands closer to the quantile than `t` does.
    fn brackets_within_ulp(&self, t: f64, u: f64) -> bool {
        self.cdf(t.next_down()) <= u && u <= self.cdf(t.next_up())
    }

    fn check_endpoints(&self) -> Result<()> {
        let Support { lo, hi } = self.support;
        let at_lo = formulas::survival(self.family, &self.params, lo);
        if !(at_lo >= 1.0 - 1e-12) {
            return Err(Error::param(
                self.family,
                format!("survival at the support infimum {lo} is {at_lo}, not 1"),
            ));
        }
        if hi.is_finite() {
            let at_hi = formulas::survival(self.family, &self.params, hi);
            if !(at_hi <= 1e-9) {
                return Err(Error::param(
                    self.family,
                    format!("survival at the support supremum {hi} is {at_hi}, not 0"),
                ));
            }
        }
        Ok(())
    }
}

/// Gompertz–Makeham quantile by the published logarithmic form and by the
/// equivalent subtractive form `(b/c - ln(1-u))/a - W(A)/c`, in that order.
pub fn gompertz_makeham_forms(spec: &DistributionSpec, u: f64) -> Result<(f64, f64)> {
    if spec.family != FamilyId::GompertzMakeham {
        return Err(Error::domain(format!(
            "dual-form evaluation applies to gompertz_makeham, not {}",
            spec.family
        )));
    }
    check_probability(u)?;
    Ok(formulas::gompertz_makeham_forms(&spec.params, u))
}

/// `{0.001} ∪ {0.005, 0.010, …, 0.995} ∪ {0.999}`: 201 points.
pub fn reference_grid() -> Vec<f64> {
    let mut grid = Vec::with_capacity(201);
    grid.push(0.001);
    grid.extend((1..=199).map(|k| f64::from(k) * 0.005));
    grid.push(0.999);
    grid
}

/// `{0.01, 0.02, …, 0.99}`: 99 points.
pub fn default_verification_grid() -> Vec<f64> {
    (1..=99).map(|k| f64::from(k) / 100.0).collect()
}

pub(crate) fn check_probability(u: f64) -> Result<()> {
    if u > 0.0 && u < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("probability must lie in (0, 1), got {u}")))
    }
}

fn check_constraints(family: FamilyId, p: &[f64; MAX_PARAMS]) -> Result<()> {
    use FamilyId::*;

    let positive = |names: &[usize]| -> Result<()> {
        for &i in names {
            if !(p[i] > 0.0) {
                let name = family.param_names()[i];
                return Err(Error::param(family, format!("{name} must be positive, got {}", p[i])));
            }
        }
        Ok(())
    };
    let nonnegative = |i: usize| -> Result<()> {
        if p[i] >= 0.0 {
            Ok(())
        } else {
            let name = family.param_names()[i];
            Err(Error::param(family, format!("{name} must be nonnegative, got {}", p[i])))
        }
    };
    let tilt = |i: usize, reduces_to: &str| -> Result<()> {
        if p[i] == 0.0 {
            let name = family.param_names()[i];
            Err(Error::param(
                family,
                format!("{name} = 0 removes the exponential tilt and the quantile divides by it; use {reduces_to}"),
            ))
        } else {
            positive(&[i])
        }
    };

    match family {
        Weibull2 | FlexibleWeibull => positive(&[0, 1]),
        Gompertz2 => {
            positive(&[0])?;
            if p[1] == 0.0 {
                Err(Error::param(family, "b must be nonzero; b = 0 is weibull2 with b = 1"))
            } else {
                Ok(())
            }
        }
        TruncLogWeibull => positive(&[1]),
        Pham => {
            if !(p[0] > 1.0) {
                return Err(Error::param(family, format!("a must exceed 1, got {}", p[0])));
            }
            positive(&[1])
        }
        ExpWeibull | ModWeibullExt | ExpInvWeibull | GenWeibull | ExtWeibull | GenPowerWeibull
        | OddWeibull => positive(&[0, 1, 2]),
        Kies4 | Phani5 => {
            nonnegative(0)?;
            if !(p[0] < p[1]) {
                return Err(Error::param(
                    family,
                    format!("support requires a < b, got a = {}, b = {}", p[0], p[1]),
                ));
            }
            if family == Kies4 {
                positive(&[2, 3])
            } else {
                positive(&[2, 3, 4])
            }
        }
        ExpKumWeibull5 => positive(&[0, 1, 2, 3, 4]),
        LaiWeibull3 => {
            positive(&[0, 1])?;
            tilt(2, "weibull2(a, b)")
        }
        InvModWeibull => {
            positive(&[0, 1])?;
            tilt(2, "an inverse Weibull law (numeric path)")
        }
        XieLai3 => {
            nonnegative(0)?;
            if !(p[1] > 1.0) {
                return Err(Error::param(family, format!("b must exceed 1, got {}", p[1])));
            }
            positive(&[2])
        }
        GenModWeibull => {
            positive(&[0, 2, 3])?;
            tilt(1, "exp_weibull(a, c, d)")
        }
        ShiftedModWeibull => {
            positive(&[0, 1])?;
            nonnegative(3)?;
            tilt(2, "weibull2 shifted by d")
        }
        AdditiveWeibull => positive(&[0, 1, 2, 3]),
        NadarajahKotz => {
            positive(&[0, 3])?;
            nonnegative(1)?;
            if !(p[2] > 0.0) {
                return Err(Error::param(
                    family,
                    format!("c must be positive (c = 0 makes the survival function identically 1), got {}", p[2]),
                ));
            }
            Ok(())
        }
        KumModWeibull => {
            positive(&[0, 1, 2, 3])?;
            tilt(4, "a Kumaraswamy Weibull law (numeric path)")
        }
        ModLogLogistic => {
            positive(&[0, 1])?;
            tilt(2, "a log-logistic law (numeric path)")
        }
        GompertzMakeham => {
            positive(&[0, 1])?;
            tilt(2, "an exponential law")
        }
        ModPowerLomax => {
            positive(&[0, 1, 3])?;
            tilt(2, "a power Lomax law (numeric path)")
        }
        ModPareto4 => {
            positive(&[0, 1, 3])?;
            nonnegative(4)?;
            tilt(2, "a Pareto IV law (numeric path)")
        }
        ModLognormal => {
            positive(&[0, 1, 4])?;
            tilt(2, "a lognormal law (numeric path)")
        }
    }
}
