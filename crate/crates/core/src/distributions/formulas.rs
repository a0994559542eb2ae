//! Per-family survival functions and inverse formulas.
//!
//! Parameters arrive as a fixed array in the family's declared order.
//! `quantile` is the implemented inverse, written with `ln_1p`/`exp_m1` so it
//! keeps its accuracy in both tails. `published_quantile` transcribes the
//! published inverse literally and is only used to audit it.

use super::{FamilyId, Support, MAX_PARAMS};
use crate::lambert_w::{w_principal, w_principal_exp};
use crate::special::{std_normal_cdf, std_normal_quantile};

type Params = [f64; MAX_PARAMS];

pub(crate) fn support(family: FamilyId, p: &Params) -> Support {
    use FamilyId::*;
    let (lo, hi) = match family {
        TruncLogWeibull => (f64::NEG_INFINITY, f64::INFINITY),
        GenWeibull => (0.0, (p[0] * p[2]).powf(-1.0 / p[1])),
        Kies4 | Phani5 => (p[0], p[1]),
        ShiftedModWeibull => (p[3], f64::INFINITY),
        ModPareto4 => (p[4], f64::INFINITY),
        _ => (0.0, f64::INFINITY),
    };
    Support { lo, hi }
}

/// Survival function evaluated from its formula, without support clamping.
pub(crate) fn survival(family: FamilyId, p: &Params, t: f64) -> f64 {
    use FamilyId::*;
    let [a, b, c, d, e] = *p;
    match family {
        Weibull2 => (-a * t.powf(b)).exp(),
        Gompertz2 => (-(a / b) * (b * t).exp_m1()).exp(),
        TruncLogWeibull => (-((t - a) / b).exp()).exp(),
        FlexibleWeibull => (-(a * t - b / t).exp()).exp(),
        Pham => (-(t.powf(b) * a.ln()).exp_m1()).exp(),
        ExpWeibull => -(c * ln_one_minus_exp(-a * t.powf(b))).exp_m1(),
        ModWeibullExt => (-a * b * (t / b).powf(c).exp_m1()).exp(),
        ExpInvWeibull => (b * ln_one_minus_exp(-a * t.powf(-c))).exp(),
        GenWeibull => (1.0 - a * c * t.powf(b)).max(0.0).powf(1.0 / c),
        ExtWeibull => {
            let x = (-(b * t).powf(c)).exp();
            a * x / (1.0 - (1.0 - a) * x)
        }
        GenPowerWeibull => (-((a * t.powf(b)).ln_1p() / c).exp_m1()).exp(),
        OddWeibull => 1.0 / (1.0 + (a * t.powf(b)).exp_m1().powf(c)),
        Kies4 => (-c * ((t - a) / (b - t)).powf(d)).exp(),
        ExpKumWeibull5 => {
            // ln F = c ln(1 - (1 - g^a)^b), g = 1 - exp(-d t^e), all in logs.
            let ln_g = ln_one_minus_exp(-d * t.powf(e));
            let ln_inner = ln_one_minus_exp(a * ln_g);
            -(c * ln_one_minus_exp(b * ln_inner)).exp_m1()
        }
        LaiWeibull3 => (-a * t.powf(b) * (c * t).exp()).exp(),
        InvModWeibull => -(-(a / t).powf(b) * (c / t).exp()).exp_m1(),
        XieLai3 => (-(a * t).powf(b) - (a * t).powf(1.0 / b) - c * t).exp(),
        GenModWeibull => -(d * ln_one_minus_exp(-a * t.powf(c) * (b * t).exp())).exp_m1(),
        ShiftedModWeibull => {
            let s = t - d;
            (-(a * s).powf(b) * (c * s).exp()).exp()
        }
        AdditiveWeibull => (-a * t.powf(b) - c * t.powf(d)).exp(),
        NadarajahKotz => (-a * t.powf(b) * (c * t.powf(d)).exp_m1()).exp(),
        KumModWeibull => {
            let ln_g = ln_one_minus_exp(-c * t.powf(d) * (e * t).exp());
            (b * ln_one_minus_exp(a * ln_g)).exp()
        }
        Phani5 => (-c * (t - a).powf(d) / (b - t).powf(e)).exp(),
        ModLogLogistic => 1.0 / (1.0 + (a * t).powf(b) * (c * t).exp()),
        GompertzMakeham => (-a * t - (b / c) * (c * t).exp_m1()).exp(),
        ModPowerLomax => (-d * ((a * t).powf(b) * (c * t).exp()).ln_1p()).exp(),
        ModPareto4 => {
            let s = t - e;
            (-d * ((a * s).powf(1.0 / b) * (c * s).exp()).ln_1p()).exp()
        }
        ModLognormal => {
            let z = (b * (a * t).ln() + c * t - d) / e;
            std_normal_cdf(-z)
        }
    }
}

/// `-ln(1 - u)`
fn cum_hazard(u: f64) -> f64 {
    -(-u).ln_1p()
}

/// `(1 - u)^(-1/d) - 1`
fn odds_power(u: f64, d: f64) -> f64 {
    (cum_hazard(u) / d).exp_m1()
}

/// `-ln(1 - u^k)`
fn neg_ln_one_minus_pow(u: f64, k: f64) -> f64 {
    -ln_one_minus_exp(k * u.ln())
}

/// `ln(1 - e^y)` for `y < 0`, switching form at `y = -ln 2` so neither
/// `e^y -> 0` nor `e^y -> 1` loses digits.
fn ln_one_minus_exp(y: f64) -> f64 {
    if y < -std::f64::consts::LN_2 {
        (-y.exp()).ln_1p()
    } else {
        (-y.exp_m1()).ln()
    }
}

fn w0(x: f64) -> f64 {
    w_principal(x).map_or(f64::NAN, |e| e.value)
}

/// Implemented inverse CDF for families with an analytic path; NaN otherwise.
pub(crate) fn quantile(family: FamilyId, p: &Params, u: f64) -> f64 {
    use FamilyId::*;
    let [a, b, c, d, e] = *p;
    match family {
        Weibull2 => (cum_hazard(u) / a).powf(1.0 / b),
        Gompertz2 => (b * cum_hazard(u) / a).ln_1p() / b,
        TruncLogWeibull => a + b * cum_hazard(u).ln(),
        FlexibleWeibull => {
            // a t^2 - y t - b = 0, positive root; rationalized when y < 0.
            let y = cum_hazard(u).ln();
            let disc = (y * y + 4.0 * a * b).sqrt();
            if y >= 0.0 {
                (y + disc) / (2.0 * a)
            } else {
                2.0 * b / (disc - y)
            }
        }
        Pham => (cum_hazard(u).ln_1p() / a.ln()).powf(1.0 / b),
        ExpWeibull => (neg_ln_one_minus_pow(u, 1.0 / c) / a).powf(1.0 / b),
        ModWeibullExt => b * (cum_hazard(u) / (a * b)).ln_1p().powf(1.0 / c),
        ExpInvWeibull => {
            let ln_one_minus_v = ln_one_minus_exp(-cum_hazard(u) / b);
            (-a / ln_one_minus_v).powf(1.0 / c)
        }
        GenWeibull => (-(-c * cum_hazard(u)).exp_m1() / (a * c)).powf(1.0 / b),
        ExtWeibull => ((-u * (1.0 - a)).ln_1p() + cum_hazard(u)).powf(1.0 / c) / b,
        GenPowerWeibull => ((c * cum_hazard(u).ln_1p()).exp_m1() / a).powf(1.0 / b),
        OddWeibull => {
            let odds_root = ((u.ln() + cum_hazard(u)) / c).exp();
            (odds_root.ln_1p() / a).powf(1.0 / b)
        }
        Kies4 => {
            let r = (cum_hazard(u) / c).powf(1.0 / d);
            (a + r * b) / (1.0 + r)
        }
        ExpKumWeibull5 => {
            // g = k^(1/a), k = 1 - m^(1/b), m = 1 - u^(1/c); d t^e = -ln(1 - g).
            let ln_m = ln_one_minus_exp(u.ln() / c);
            let ln_k = ln_one_minus_exp(ln_m / b);
            (-ln_one_minus_exp(ln_k / a) / d).powf(1.0 / e)
        }
        LaiWeibull3 | InvModWeibull | GenModWeibull | ShiftedModWeibull | KumModWeibull
        | ModLogLogistic | ModPowerLomax | ModPareto4 => {
            let w = w0(lambert_argument(family, p, u).unwrap_or(f64::NAN));
            match family {
                LaiWeibull3 | ModLogLogistic | ModPowerLomax => (b / c) * w,
                InvModWeibull => (c / b) / w,
                GenModWeibull => (c / b) * w,
                ShiftedModWeibull => d + (b / c) * w,
                KumModWeibull => (d / e) * w,
                ModPareto4 => e + w / (c * b),
                _ => unreachable!(),
            }
        }
        GompertzMakeham => gompertz_makeham_forms(p, u).0,
        ModLognormal => match std_normal_quantile(u) {
            Ok(z) => {
                let ln_arg = (c / (a * b)).ln() + (e * z + d) / b;
                (b / c) * w_principal_exp(ln_arg).unwrap_or(f64::NAN)
            }
            Err(_) => f64::NAN,
        },
        XieLai3 | AdditiveWeibull | NadarajahKotz | Phani5 => f64::NAN,
    }
}

/// Argument passed to `W0` by [`quantile`]; `None` for families without a
/// Lambert-W inverse. May be `+inf` where the quantile works in log space.
pub(crate) fn lambert_argument(family: FamilyId, p: &Params, u: f64) -> Option<f64> {
    use FamilyId::*;
    let [a, b, c, d, e] = *p;
    let x = match family {
        LaiWeibull3 => (c / b) * (cum_hazard(u) / a).powf(1.0 / b),
        InvModWeibull => (c / (b * a)) * (-u.ln()).powf(1.0 / b),
        GenModWeibull => (b / c) * (neg_ln_one_minus_pow(u, 1.0 / d) / a).powf(1.0 / c),
        ShiftedModWeibull => c * cum_hazard(u).powf(1.0 / b) / (a * b),
        KumModWeibull => {
            let ln_m = ln_one_minus_exp(-cum_hazard(u) / b);
            let inner = -ln_one_minus_exp(ln_m / a);
            (e / d) * (inner / c).powf(1.0 / d)
        }
        ModLogLogistic => (c / (a * b)) * odds_power(u, 1.0).powf(1.0 / b),
        ModPowerLomax => (c / (a * b)) * odds_power(u, d).powf(1.0 / b),
        ModPareto4 => (c * b / a) * odds_power(u, d).powf(b),
        GompertzMakeham => (b / a) * ((b + c * cum_hazard(u)) / a).exp(),
        ModLognormal => {
            let z = std_normal_quantile(u).ok()?;
            (c / (a * b)) * ((e * z + d) / b).exp()
        }
        _ => return None,
    };
    Some(x)
}

/// Published logarithmic form and the equivalent subtractive form.
pub(crate) fn gompertz_makeham_forms(p: &Params, u: f64) -> (f64, f64) {
    let [a, b, c, ..] = *p;
    let h = cum_hazard(u);
    let ln_arg = (b / a).ln() + (b + c * h) / a;
    let w = w_principal_exp(ln_arg).unwrap_or(f64::NAN);
    let logarithmic = ((a / b) * w).ln() / c;
    let subtractive = (b / c + h) / a - w / c;
    (logarithmic, subtractive)
}

/// Published inverse CDF, transcribed term by term.
pub(crate) fn published_quantile(family: FamilyId, p: &Params, u: f64) -> Option<f64> {
    use FamilyId::*;
    let [a, b, c, d, e] = *p;
    let ln1mu = (1.0 - u).ln();
    let t = match family {
        Weibull2 => (ln1mu / -a).powf(1.0 / b),
        Gompertz2 => (1.0 / b) * (1.0 - (b / a) * ln1mu).ln(),
        TruncLogWeibull => a + b * (-ln1mu).ln(),
        FlexibleWeibull => {
            // The ± is resolved in the formula's favour: whichever sign roundtrips better.
            let root = ((-ln1mu).ln().powi(2) + 4.0 * a * b).sqrt();
            let plus = -(-ln1mu + root).ln() / (2.0 * a);
            let minus = -(-ln1mu - root).ln() / (2.0 * a);
            let cdf = |t: f64| 1.0 - survival(family, p, t);
            let err = |t: f64| {
                if t.is_finite() && t > 0.0 {
                    (cdf(t) - u).abs()
                } else {
                    f64::INFINITY
                }
            };
            if err(minus) < err(plus) {
                minus
            } else {
                plus
            }
        }
        Pham => ((1.0 - ln1mu).ln() / a.ln()).powf(1.0 / b),
        ExpWeibull => ((-1.0 / a) * (1.0 - u.powf(1.0 / c)).ln()).powf(1.0 / b),
        ModWeibullExt => a * (1.0 - (1.0 / (a * b)) * ln1mu).ln().powf(1.0 / c),
        ExpInvWeibull => (-a / (1.0 - (1.0 - u).powf(1.0 / b)).ln()).powf(1.0 / c),
        GenWeibull => ((1.0 - (1.0 - u).powf(c)) / (a * c)).powf(1.0 / b),
        ExtWeibull => (1.0 / b) * (((2.0 * a - 1.0) + u * (1.0 - a)) / u).ln().powf(1.0 / c),
        GenPowerWeibull => (((1.0 - ln1mu).powf(c) - 1.0) / a).powf(1.0 / b),
        OddWeibull => ((1.0 / a) * ((u / (1.0 - u)).powf(1.0 / c) + 1.0).ln()).powf(1.0 / b),
        Kies4 => {
            let num = (b.powf(d) * ln1mu / -c).powf(1.0 / d) + a;
            let den = (ln1mu / -c).powf(1.0 / d) + 1.0;
            num / den
        }
        ExpKumWeibull5 => {
            let inner = 1.0 - (1.0 - (1.0 - (1.0 - u).powf(1.0 / c)).powf(1.0 / b)).powf(1.0 / a);
            (-(inner.ln() / d)).powf(1.0 / e)
        }
        LaiWeibull3 => (b / c) * w0((c / b) * ((-1.0 / a) * ln1mu).powf(1.0 / b)),
        InvModWeibull => (c / b) / w0((c / (b * a)) * (-u.ln()).powf(1.0 / b)),
        GenModWeibull => (c / b) * w0((b / c) * ((-1.0 / a) * (1.0 - u.powf(1.0 / d)).ln()).powf(1.0 / c)),
        ShiftedModWeibull => d + (b / c) * w0(c * (-ln1mu).powf(1.0 / b) / (a * b)),
        KumModWeibull => {
            let inner = (1.0 - (1.0 - (1.0 - u).powf(1.0 / b)).powf(1.0 / a)).ln();
            (d / e) * w0((e / d) * ((-1.0 / c) * inner).powf(1.0 / d))
        }
        ModLogLogistic => (b / c) * w0((c / (a * b)) * (1.0 / (1.0 - u) - 1.0).powf(1.0 / b)),
        GompertzMakeham => {
            let w = w0((b / a) * ((b - c * ln1mu) / a).exp());
            ((a / b) * w).powf(1.0 / c).ln()
        }
        ModPowerLomax => {
            (b / c) * w0((c / (a * b)) * ((1.0 - u).powf(-1.0 / d) - 1.0).powf(1.0 / b))
        }
        ModPareto4 => (1.0 / (c * b)) * w0(((1.0 - u).powf(-1.0 / d) - 1.0).powf(b)) + e,
        ModLognormal => {
            // Phi is published as the integral of the normal density from 0 to t,
            // i.e. the standard CDF minus 1/2, so its inverse is Phi^-1(u + 1/2).
            let z = if u < 0.5 {
                std_normal_quantile(u + 0.5).unwrap_or(f64::NAN)
            } else {
                f64::NAN
            };
            (b / c) * w0((c / (a * b)) * (e * z + d).exp().powf(1.0 / b))
        }
        XieLai3 | AdditiveWeibull | NadarajahKotz | Phani5 => return None,
    };
    Some(t)
}
