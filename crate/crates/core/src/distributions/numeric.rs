//! CDF inversion by bracket expansion and bisection.

use super::{check_probability, DistributionSpec, QuantilePath, QuantileResult};
use crate::error::{Error, Result};

const MAX_DOUBLINGS: u32 = 1000;
const MAX_BISECTIONS: u32 = 2200;

pub(super) fn invert_cdf(spec: &DistributionSpec, u: f64, tol: f64) -> Result<QuantileResult> {
    check_probability(u)?;
    if !(tol >= 1e-14) {
        return Err(Error::domain(format!("tolerance must be at least 1e-14, got {tol}")));
    }

    // For u > 1/2 compare survival against 1 - u, which is exact there and
    // keeps resolution in the upper tail where F rounds to 1.
    let upper = u > 0.5;
    let target_sf = 1.0 - u;
    let below = |t: f64| {
        if upper {
            spec.survival(t) > target_sf
        } else {
            spec.cdf(t) < u
        }
    };
    let residual = |t: f64| (spec.cdf(t) - u).abs();

    let support = spec.support();
    let mut lo = if support.lo.is_finite() {
        support.lo
    } else {
        expand(u, -1.0, below)?
    };
    let mut hi = if support.hi.is_finite() {
        support.hi
    } else {
        let origin = lo.max(0.0);
        expand(u, 1.0, |t| !below(origin + t)).map(|s| origin + s)?
    };
    let (bracket_lo, bracket_hi) = (lo, hi);

    for _ in 0..MAX_BISECTIONS {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if below(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let mut t = if residual(lo) <= residual(hi) { lo } else { hi };

    // Newton polish with a central-difference density; kept only if it helps.
    let h = 1e-6 * t.abs().max(1e-8);
    let density = (spec.cdf(t + h) - spec.cdf(t - h)) / (2.0 * h);
    if density > 0.0 && density.is_finite() {
        let candidate = t - (spec.cdf(t) - u) / density;
        if candidate > bracket_lo && candidate < bracket_hi && residual(candidate) < residual(t) {
            t = candidate;
        }
    }

    let r = residual(t);
    if r > tol {
        return Err(Error::Convergence { residual: r, tol });
    }
    Ok(QuantileResult {
        t,
        path: QuantilePath::Numeric,
        roundtrip_residual: r,
    })
}

/// Smallest `step * 2^k` (`k < MAX_DOUBLINGS`) for which `done(direction * step)` holds.
fn expand(u: f64, direction: f64, done: impl Fn(f64) -> bool) -> Result<f64> {
    let mut step = 1.0;
    for _ in 0..MAX_DOUBLINGS {
        let t = direction * step;
        if done(t) {
            return Ok(t);
        }
        step *= 2.0;
    }
    Err(Error::Bracket {
        u,
        doublings: MAX_DOUBLINGS,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{validate, FamilyId};
    use super::*;

    #[test]
    fn exponential_median() {
        let s = validate(FamilyId::Weibull2, &[("a", 1.0), ("b", 1.0)]).unwrap();
        let q = s.numeric_quantile(0.5, 1e-12).unwrap();
        assert!((q.t - std::f64::consts::LN_2).abs() < 1e-12);
        assert_eq!(q.path, QuantilePath::Numeric);
    }

    #[test]
    fn additive_weibull_median() {
        // t^2 + sqrt(t) = ln 2
        let s = validate(
            FamilyId::AdditiveWeibull,
            &[("a", 1.0), ("b", 2.0), ("c", 1.0), ("d", 0.5)],
        )
        .unwrap();
        let q = s.numeric_quantile(0.5, 1e-12).unwrap();
        assert!(q.roundtrip_residual <= 1e-12);
        assert!((q.t * q.t + q.t.sqrt() - std::f64::consts::LN_2).abs() < 1e-12);
        assert!((q.t - 0.336_388_416_282_646_9).abs() < 1e-12);
    }

    #[test]
    fn xie_lai_lower_quartile_self_certifies() {
        let s = validate(FamilyId::XieLai3, &[("a", 1.0), ("b", 2.0), ("c", 1.0)]).unwrap();
        let q = s.numeric_quantile(0.25, 1e-12).unwrap();
        assert!((s.cdf(q.t) - 0.25).abs() <= 1e-12);
    }

    #[test]
    fn unbounded_below_support() {
        let s = validate(FamilyId::TruncLogWeibull, &[("a", 2.0), ("b", 0.5)]).unwrap();
        let deep = s.numeric_quantile(1e-10, 1e-12).unwrap();
        assert!(deep.t < -9.0 && deep.roundtrip_residual <= 1e-12);
        for &u in &[1e-4, 0.3, 0.999_999] {
            let q = s.numeric_quantile(u, 1e-12).unwrap();
            let exact = s.quantile(u).unwrap().t;
            assert!((q.t - exact).abs() <= 1e-9 * exact.abs().max(1.0), "u={u}");
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let s = validate(FamilyId::Weibull2, &[("a", 1.0), ("b", 1.0)]).unwrap();
        assert!(s.numeric_quantile(0.0, 1e-12).is_err());
        assert!(s.numeric_quantile(0.5, 1e-15).is_err());
    }

    #[test]
    fn unattainable_probability_fails_to_bracket() {
        let s = validate(FamilyId::Gompertz2, &[("a", 1.0), ("b", -1.0)]).unwrap();
        assert!(matches!(
            s.numeric_quantile(0.9, 1e-12),
            Err(Error::Bracket { .. })
        ));
    }
}
