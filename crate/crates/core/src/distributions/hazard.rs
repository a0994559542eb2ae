use serde::Serialize;

use crate::error::{Error, Result};

/// Shape of a failure-rate curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum HazardShape {
    /// Nondecreasing everywhere (`b >= 1`).
    Increasing,
    /// Decreasing then increasing, with its minimum at `(sqrt(b) - b)/c` (`0 < b < 1`, `c > 0`).
    Bathtub,
    /// Strictly decreasing; only the untilted case `c = 0`, `b < 1`.
    Decreasing,
}

/// Failure rate `r(t) = a (b + c t) t^(b-1) e^(c t)` of `lai_weibull3` and its shape class.
pub fn wl_hazard(a: f64, b: f64, c: f64, t: f64) -> Result<(f64, HazardShape)> {
    if !(a > 0.0 && b > 0.0 && c >= 0.0) || !c.is_finite() || !a.is_finite() || !b.is_finite() {
        return Err(Error::domain(format!(
            "hazard requires a > 0, b > 0, c >= 0, got a = {a}, b = {b}, c = {c}"
        )));
    }
    if !(t > 0.0) {
        return Err(Error::domain(format!("hazard requires t > 0, got {t}")));
    }
    let rate = a * (b + c * t) * t.powf(b - 1.0) * (c * t).exp();
    let shape = if b >= 1.0 {
        HazardShape::Increasing
    } else if c > 0.0 {
        HazardShape::Bathtub
    } else {
        HazardShape::Decreasing
    };
    Ok((rate, shape))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_hazard_of_exponential() {
        assert_eq!(wl_hazard(1.0, 1.0, 0.0, 5.0).unwrap(), (1.0, HazardShape::Increasing));
    }

    #[test]
    fn direct_substitution() {
        let (rate, shape) = wl_hazard(1.0, 2.0, 1.0, 1.0).unwrap();
        assert!((rate - 8.154_845_485_377_136).abs() < 1e-14);
        assert_eq!(shape, HazardShape::Increasing);
    }

    #[test]
    fn bathtub_below_unit_shape() {
        for &t in &[1e-3, 0.2, 1.0, 40.0] {
            assert_eq!(wl_hazard(1.0, 0.5, 1.0, t).unwrap().1, HazardShape::Bathtub);
        }
        assert_eq!(wl_hazard(1.0, 0.5, 0.0, 1.0).unwrap().1, HazardShape::Decreasing);
    }

    #[test]
    fn rejects_nonpositive_time() {
        assert!(wl_hazard(1.0, 1.0, 1.0, 0.0).is_err());
        assert!(wl_hazard(1.0, 1.0, 1.0, -1.0).is_err());
        assert!(wl_hazard(0.0, 1.0, 1.0, 1.0).is_err());
    }
}
