//! Inverse-transform sampling and goodness-of-fit statistics.
//!
//! Uniform `i` of a batch is draw `i` of a [`SeededStream`]; the parallel path
//! hands each worker a disjoint block of positions and writes results back in
//! position order, so serial and parallel batches are bit-identical.

mod stream;

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::distributions::DistributionSpec;
use crate::error::{Error, Result};

pub use stream::{SeededStream, ALGORITHM_ID};

/// Tolerance of the numeric path when used for sampling.
pub const NUMERIC_SAMPLING_TOL: f64 = 1e-12;

const CHUNK: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SampleMethod {
    Analytic,
    Numeric,
    /// Analytic when the family has one, numeric otherwise.
    Auto,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampleBatch {
    pub spec: DistributionSpec,
    pub values: Vec<f64>,
    pub seed: u64,
    /// Resolved method; never `Auto`.
    pub method: SampleMethod,
}

/// Draws `n` variates, spreading the work over the rayon pool.
pub fn sample(spec: &DistributionSpec, n: usize, seed: u64, method: SampleMethod) -> Result<SampleBatch> {
    let method = resolve(spec, n, method)?;
    let mut values = vec![0.0; n];
    values
        .par_chunks_mut(CHUNK)
        .enumerate()
        .try_for_each(|(k, chunk)| fill_chunk(spec, method, SeededStream::at(seed, (k * CHUNK) as u64), chunk))?;
    Ok(SampleBatch {
        spec: *spec,
        values,
        seed,
        method,
    })
}

/// Single-threaded reference path for [`sample`].
pub fn sample_serial(spec: &DistributionSpec, n: usize, seed: u64, method: SampleMethod) -> Result<SampleBatch> {
    let method = resolve(spec, n, method)?;
    let mut values = vec![0.0; n];
    fill_chunk(spec, method, SeededStream::new(seed), &mut values)?;
    Ok(SampleBatch {
        spec: *spec,
        values,
        seed,
        method,
    })
}

fn resolve(spec: &DistributionSpec, n: usize, method: SampleMethod) -> Result<SampleMethod> {
    if n == 0 {
        return Err(Error::domain("sample size must be at least 1"));
    }
    let analytic = spec.family().has_analytic_quantile();
    match method {
        SampleMethod::Analytic if !analytic => Err(Error::NoAnalyticForm(spec.family())),
        SampleMethod::Auto if analytic => Ok(SampleMethod::Analytic),
        SampleMethod::Auto => Ok(SampleMethod::Numeric),
        m => Ok(m),
    }
}

fn fill_chunk(spec: &DistributionSpec, method: SampleMethod, mut stream: SeededStream, out: &mut [f64]) -> Result<()> {
    for x in out {
        let u = stream.next_uniform();
        *x = match method {
            SampleMethod::Numeric => spec.numeric_quantile(u, NUMERIC_SAMPLING_TOL)?.t,
            _ => spec.quantile(u)?.t,
        };
    }
    Ok(())
}

/// Kolmogorov–Smirnov distance between the batch and its own law.
pub fn ks_statistic(batch: &SampleBatch) -> Result<f64> {
    ks_against(&batch.values, &batch.spec)
}

/// `sup |F_n - F|` from the sorted sample: `max_i max(i/n - F(x_i), F(x_i) - (i-1)/n)`.
pub fn ks_against(values: &[f64], spec: &DistributionSpec) -> Result<f64> {
    if values.is_empty() {
        return Err(Error::domain("KS statistic of an empty sample"));
    }
    if let Some(bad) = values.iter().find(|v| v.is_nan()) {
        return Err(Error::domain(format!("sample contains {bad}")));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let d = sorted.iter().enumerate().fold(0.0f64, |d, (i, &x)| {
        let f = spec.cdf(x);
        let i = i as f64;
        d.max((i + 1.0) / n - f).max(f - i / n)
    });
    Ok(d.clamp(0.0, 1.0))
}

/// Sample mean and unbiased variance.
pub fn empirical_moments(values: &[f64]) -> Result<(f64, f64)> {
    if values.len() < 2 {
        return Err(Error::domain(format!("moments need at least 2 values, got {}", values.len())));
    }
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|x| (x - mean) * (x - mean)).sum();
    Ok((mean, ss / (n - 1.0)))
}

impl SampleBatch {
    pub fn moments(&self) -> Result<(f64, f64)> {
        empirical_moments(&self.values)
    }

    /// Header `value`, then one number per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(self.values.len() * 20 + 6);
        out.push_str("value\n");
        for v in &self.values {
            let _ = writeln!(out, "{}", format_number(*v));
        }
        out
    }

    /// Spec echo, generator, seed, method and values. Infinite bounds are `null`.
    pub fn to_json(&self) -> String {
        let finite = |x: f64| if x.is_finite() { json!(x) } else { json!(null) };
        let params: serde_json::Map<String, serde_json::Value> = self
            .spec
            .named_params()
            .map(|(k, v)| (k.to_owned(), json!(v)))
            .collect();
        let support = self.spec.support();
        json!({
            "family": self.spec.family(),
            "params": params,
            "support": [finite(support.lo), finite(support.hi)],
            "algorithm": ALGORITHM_ID,
            "seed": self.seed,
            "method": self.method,
            "n": self.values.len(),
            "values": self.values,
        })
        .to_string()
    }
}

/// Shortest representation that parses back to the same `f64`.
pub fn format_number(x: f64) -> String {
    let a = x.abs();
    if x == 0.0 || (1e-5..1e16).contains(&a) || !x.is_finite() {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distributions::{validate, FamilyId};

    fn exponential() -> DistributionSpec {
        validate(FamilyId::Weibull2, &[("a", 1.0), ("b", 1.0)]).unwrap()
    }

    #[test]
    fn reruns_are_identical() {
        let s = exponential();
        let a = sample(&s, 3, 42, SampleMethod::Auto).unwrap();
        let b = sample(&s, 3, 42, SampleMethod::Auto).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.method, SampleMethod::Analytic);
    }

    #[test]
    fn parallel_matches_serial_across_chunks() {
        let s = exponential();
        let n = 3 * CHUNK + 17;
        let par = sample(&s, n, 5, SampleMethod::Analytic).unwrap();
        let ser = sample_serial(&s, n, 5, SampleMethod::Analytic).unwrap();
        assert!(par.values.iter().zip(&ser.values).all(|(a, b)| a.to_bits() == b.to_bits()));
    }

    #[test]
    fn single_point_at_median() {
        let s = exponential();
        let d = ks_against(&[std::f64::consts::LN_2], &s).unwrap();
        assert!((d - 0.5).abs() < 1e-15);
    }

    #[test]
    fn moments_of_small_samples() {
        assert_eq!(empirical_moments(&[1.0, 1.0, 1.0]).unwrap(), (1.0, 0.0));
        assert_eq!(empirical_moments(&[0.0, 2.0]).unwrap(), (1.0, 2.0));
        assert!(empirical_moments(&[1.0]).is_err());
    }

    #[test]
    fn analytic_request_for_numeric_only_family() {
        let s = validate(FamilyId::XieLai3, &[("a", 1.0), ("b", 2.0), ("c", 1.0)]).unwrap();
        assert!(matches!(sample(&s, 2, 1, SampleMethod::Analytic), Err(Error::NoAnalyticForm(_))));
        assert_eq!(sample(&s, 2, 1, SampleMethod::Auto).unwrap().method, SampleMethod::Numeric);
        assert!(sample(&exponential(), 0, 1, SampleMethod::Auto).is_err());
    }

    #[test]
    fn csv_and_json_shapes() {
        let b = sample(&exponential(), 4, 1, SampleMethod::Auto).unwrap();
        let csv = b.to_csv();
        assert_eq!(csv.lines().count(), 5);
        assert_eq!(csv.lines().next(), Some("value"));
        let v: serde_json::Value = serde_json::from_str(&b.to_json()).unwrap();
        assert_eq!(v["family"], "weibull2");
        assert_eq!(v["support"][1], serde_json::Value::Null);
        assert_eq!(v["values"].as_array().unwrap().len(), 4);
    }

    #[test]
    fn number_format_roundtrips() {
        for &x in &[0.0, 1.0, 1e-7, 123456789.123, 3.5e20, -2.5e-9] {
            assert_eq!(format_number(x).parse::<f64>().unwrap(), x);
        }
        assert_eq!(format_number(std::f64::consts::LN_2), "0.6931471805599453");
    }
}
