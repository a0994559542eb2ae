//! Real branches of the Lambert W function.
//!
//! `W(x)` solves `w * exp(w) = x`. On `[-1/e, 0)` there are two real
//! solutions: the principal branch `W0` with `w >= -1` and the lower branch
//! `W-1` with `w <= -1`. Both meet at the branch point `x = -1/e, w = -1`.
//!
//! Evaluation picks a starting value by regime (Maclaurin series near the
//! origin, the `ln x - ln ln x` asymptote for large `|w|`, the branch-point
//! expansion in `p = ±sqrt(2(e x + 1))` near `-1/e`) and refines it with
//! Halley's iteration.

use crate::error::{Error, Result};

/// `-1/e` rounded to the nearest double.
pub const BRANCH_POINT: f64 = -0.367_879_441_171_442_33;

/// Inputs this far below [`BRANCH_POINT`] are treated as the branch point.
pub const BRANCH_CLAMP: f64 = 1e-15;

const MAX_ITERATIONS: u32 = 50;

// e = E_HI + E_LO to ~32 digits, used to form e*x + 1 without cancellation.
const E_HI: f64 = std::f64::consts::E;
const E_LO: f64 = 1.445_646_891_729_250_2e-16;

// Coefficients of W in powers of p = ±sqrt(2(e x + 1)).
const BRANCH_SERIES: [f64; 10] = [
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17280.0,
    -221.0 / 8505.0,
    680_863.0 / 43_545_600.0,
    -1963.0 / 204_120.0,
    226_287_557.0 / 37_623_398_400.0,
];

/// Selects one of the two real branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BranchId {
    /// `W0`, defined for `x >= -1/e`, values `>= -1`.
    Principal,
    /// `W-1`, defined for `-1/e <= x < 0`, values `<= -1`.
    Lower,
}

/// A Lambert W value together with its quality metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WEvaluation {
    pub value: f64,
    /// `|w e^w - x| / max(|x|, 1e-300)`.
    pub residual: f64,
    /// Halley steps taken; zero when the start value was already final.
    pub iterations: u32,
}

impl WEvaluation {
    fn new(x: f64, value: f64, iterations: u32) -> Self {
        WEvaluation {
            value,
            residual: identity_residual(x, value),
            iterations,
        }
    }
}

/// Relative residual of the defining identity `w e^w = x`.
pub fn identity_residual(x: f64, w: f64) -> f64 {
    if x.abs() >= 1e-300 {
        // (w/x) e^w stays finite where w e^w would overflow near f64::MAX.
        ((w / x) * w.exp() - 1.0).abs()
    } else {
        (w * w.exp() - x).abs() / 1e-300
    }
}

/// Evaluates the requested branch.
pub fn lambert_w(branch: BranchId, x: f64) -> Result<WEvaluation> {
    match branch {
        BranchId::Principal => w_principal(x),
        BranchId::Lower => w_lower(x),
    }
}

/// Principal branch `W0(x)` for `x >= -1/e`.
pub fn w_principal(x: f64) -> Result<WEvaluation> {
    if !x.is_finite() {
        return Err(Error::domain(format!("W0 requires a finite argument, got {x}")));
    }
    if x < BRANCH_POINT - BRANCH_CLAMP {
        return Err(Error::domain(format!("W0 is undefined below -1/e, got {x}")));
    }
    if x == 0.0 {
        return Ok(WEvaluation::new(x, 0.0, 0));
    }

    let q = branch_offset(x);
    if q <= 0.0 {
        return Ok(WEvaluation::new(x, -1.0, 0));
    }
    let p = (2.0 * q).sqrt();
    if p < 1e-3 {
        return Ok(WEvaluation::new(x, branch_series(p), 0));
    }

    let start = if x < -0.25 {
        branch_series(p)
    } else if x.abs() <= 0.05 {
        maclaurin_start(x)
    } else if x > std::f64::consts::E {
        log_asymptote(x.ln())
    } else {
        // Winitzki's approximation, accurate to a few percent on [-0.25, e].
        let l = x.ln_1p();
        l * (1.0 - l.ln_1p() / (2.0 + l))
    };
    let (w, iterations) = halley(x, start);
    Ok(WEvaluation::new(x, w.max(-1.0), iterations))
}

/// Lower branch `W-1(x)` for `-1/e <= x < 0`.
pub fn w_lower(x: f64) -> Result<WEvaluation> {
    if !x.is_finite() || x >= 0.0 {
        return Err(Error::domain(format!("W-1 requires -1/e <= x < 0, got {x}")));
    }
    if x < BRANCH_POINT - BRANCH_CLAMP {
        return Err(Error::domain(format!("W-1 is undefined below -1/e, got {x}")));
    }

    let q = branch_offset(x);
    if q <= 0.0 {
        return Ok(WEvaluation::new(x, -1.0, 0));
    }
    let p = -(2.0 * q).sqrt();
    if p > -1e-3 {
        return Ok(WEvaluation::new(x, branch_series(p), 0));
    }

    let start = if x < -0.25 {
        branch_series(p)
    } else {
        let l1 = (-x).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    };
    let (w, iterations) = halley(x, start);
    Ok(WEvaluation::new(x, w.min(-1.0), iterations))
}

/// `W0(e^log_x)` without forming `e^log_x`, for arguments beyond `f64::MAX`.
pub fn w_principal_exp(log_x: f64) -> Result<f64> {
    if log_x.is_nan() || log_x == f64::INFINITY {
        return Err(Error::domain(format!("W0(exp({log_x})) is not finite")));
    }
    if log_x < 700.0 {
        return w_principal(log_x.exp()).map(|e| e.value);
    }
    // Newton on w + ln w = log_x; the residual is smooth and convex here.
    let mut w = log_asymptote(log_x);
    for _ in 0..MAX_ITERATIONS {
        let step = (w + w.ln() - log_x) / (1.0 + 1.0 / w);
        w -= step;
        if step.abs() <= 1e-15 * (1.0 + w.abs()) {
            break;
        }
    }
    Ok(w)
}

/// Partial sum `sum_{k=1}^{n_terms} (-k)^(k-1)/k! x^k` of the Maclaurin series of `W0`.
pub fn w_series(x: f64, n_terms: u32) -> Result<f64> {
    if !(x.abs() < -BRANCH_POINT) {
        return Err(Error::domain(format!(
            "series diverges for |x| >= 1/e, got {x}"
        )));
    }
    if n_terms == 0 || n_terms > 30 {
        return Err(Error::domain(format!(
            "series term count must lie in 1..=30, got {n_terms}"
        )));
    }
    let mut factorial = 1.0;
    let mut sum = 0.0;
    for k in 1..=n_terms {
        factorial *= f64::from(k);
        let coeff = (-f64::from(k)).powi(k as i32 - 1) / factorial;
        sum += coeff * x.powi(k as i32);
    }
    Ok(sum)
}

/// Euler's tree function `T(x) = -W0(-x)`, the solution of `T = x e^T`.
pub fn tree_t(x: f64) -> Result<f64> {
    if x > -BRANCH_POINT + BRANCH_CLAMP {
        return Err(Error::domain(format!("T is undefined above 1/e, got {x}")));
    }
    w_principal(-x).map(|e| -e.value)
}

/// `e*x + 1` with the low-order part of `e` restored.
fn branch_offset(x: f64) -> f64 {
    E_HI.mul_add(x, 1.0) + E_LO * x
}

fn branch_series(p: f64) -> f64 {
    BRANCH_SERIES.iter().rev().fold(0.0, |acc, &c| acc * p + c)
}

fn maclaurin_start(x: f64) -> f64 {
    x * (1.0 + x * (-1.0 + x * (1.5 + x * (-8.0 / 3.0 + x * 125.0 / 24.0))))
}

fn log_asymptote(l1: f64) -> f64 {
    let l2 = l1.ln();
    l1 - l2 + l2 / l1
}

/// Halley iteration on `f(w) = w - x e^{-w}`, which shares roots with `w e^w - x`
/// and stays bounded over both branches.
fn halley(x: f64, mut w: f64) -> (f64, u32) {
    let mut iterations = 0;
    while iterations < MAX_ITERATIONS {
        iterations += 1;
        let x_over_ew = if -w > 700.0 {
            x.signum() * ((x.abs()).ln() - w).exp()
        } else {
            x * (-w).exp()
        };
        let f = w - x_over_ew;
        let wp1 = w + 1.0;
        if wp1 == 0.0 || f == 0.0 {
            break;
        }
        let step = f / (wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if step.abs() <= 1e-15 * (1.0 + w.abs()) {
            break;
        }
    }
    (w, iterations)
}
