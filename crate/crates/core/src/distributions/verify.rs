//! Roundtrip check of every published inverse against its own survival function.

use std::fmt::Write as _;

use serde::Serialize;

use super::{check_probability, reference_sets, DistributionSpec, FamilyId, FormulaStatus};
use crate::error::{Error, Result};

/// Largest roundtrip error at which a published inverse counts as correct.
pub const PRINTED_TOLERANCE: f64 = 1e-8;

const MIN_GRID: usize = 99;
const NUMERIC_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    VerifiedAsPrinted,
    CorrectedFormula,
    NoClosedForm,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrataEntry {
    pub family: FamilyId,
    pub verdict: Verdict,
    /// Worst `|F(Q(u)) - u|` of the published inverse; absent when none is published.
    /// A non-finite output counts as an error of 1.
    pub max_roundtrip_error_printed: Option<f64>,
    /// Same for the evaluated quantile (numeric inversion for `NoClosedForm`).
    pub max_roundtrip_error_implemented: Option<f64>,
    pub note: String,
}

/// Evaluates the published and the implemented inverse of one parameter set on `grid`.
pub fn verify_family(spec: &DistributionSpec, grid: &[f64]) -> Result<ErrataEntry> {
    if grid.len() < MIN_GRID {
        return Err(Error::domain(format!(
            "verification grid needs at least {MIN_GRID} points, got {}",
            grid.len()
        )));
    }
    for &u in grid {
        check_probability(u)?;
    }

    let residual = |t: f64, u: f64| {
        if t.is_finite() {
            (spec.cdf(t) - u).abs()
        } else {
            1.0
        }
    };
    let family = spec.family();
    let info = family.info();

    // Points the law never reaches (defective gompertz2) are skipped.
    let attainable = grid.iter().copied().filter(|&u| u < spec.max_probability());

    let entry = if family.status() == FormulaStatus::NoClosedForm {
        let mut worst = 0.0f64;
        for u in attainable {
            worst = worst.max(spec.numeric_quantile(u, NUMERIC_TOL)?.roundtrip_residual);
        }
        ErrataEntry {
            family,
            verdict: Verdict::NoClosedForm,
            max_roundtrip_error_printed: None,
            max_roundtrip_error_implemented: Some(worst),
            note: info.note.to_owned(),
        }
    } else {
        let (mut printed, mut implemented) = (0.0f64, 0.0f64);
        for u in attainable {
            let p = spec.published_quantile(u).map_or(1.0, |t| residual(t, u));
            printed = printed.max(if p.is_nan() { 1.0 } else { p });
            let q = spec.quantile(u).map_or(1.0, |q| q.roundtrip_residual);
            implemented = implemented.max(q);
        }
        let verdict = if printed <= PRINTED_TOLERANCE {
            Verdict::VerifiedAsPrinted
        } else {
            Verdict::CorrectedFormula
        };
        ErrataEntry {
            family,
            verdict,
            max_roundtrip_error_printed: Some(printed),
            max_roundtrip_error_implemented: Some(implemented),
            note: info.note.to_owned(),
        }
    };
    Ok(entry)
}

/// One entry per family, in catalog order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrataReport {
    pub entries: Vec<ErrataEntry>,
}

/// Runs [`verify_family`] over every reference set and keeps the worst case per family.
pub fn errata_report(grid: &[f64]) -> Result<ErrataReport> {
    let mut entries: Vec<ErrataEntry> = Vec::with_capacity(FamilyId::ALL.len());
    for family in FamilyId::ALL {
        let mut merged: Option<ErrataEntry> = None;
        for spec in reference_sets().iter().filter(|s| s.family() == family) {
            let e = verify_family(spec, grid)?;
            merged = Some(match merged {
                None => e,
                Some(m) => merge(m, e),
            });
        }
        if let Some(m) = merged {
            entries.push(m);
        }
    }
    Ok(ErrataReport { entries })
}

fn merge(a: ErrataEntry, b: ErrataEntry) -> ErrataEntry {
    let worst = |x: Option<f64>, y: Option<f64>| match (x, y) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    };
    let printed = worst(a.max_roundtrip_error_printed, b.max_roundtrip_error_printed);
    let verdict = match (a.verdict, printed) {
        (Verdict::NoClosedForm, _) => Verdict::NoClosedForm,
        (_, Some(e)) if e > PRINTED_TOLERANCE => Verdict::CorrectedFormula,
        _ => Verdict::VerifiedAsPrinted,
    };
    ErrataEntry {
        verdict,
        max_roundtrip_error_printed: printed,
        max_roundtrip_error_implemented: worst(
            a.max_roundtrip_error_implemented,
            b.max_roundtrip_error_implemented,
        ),
        ..a
    }
}

impl ErrataReport {
    pub fn entry(&self, family: FamilyId) -> Option<&ErrataEntry> {
        self.entries.iter().find(|e| e.family == family)
    }

    pub fn families_with(&self, verdict: Verdict) -> Vec<FamilyId> {
        self.entries
            .iter()
            .filter(|e| e.verdict == verdict)
            .map(|e| e.family)
            .collect()
    }

    /// `{"entries":[` followed by one compact entry per line.
    pub fn to_json(&self) -> String {
        let mut out = String::from("{\"entries\":[\n");
        for (i, e) in self.entries.iter().enumerate() {
            out.push_str(&serde_json::to_string(e).expect("entries serialize"));
            out.push_str(if i + 1 < self.entries.len() { ",\n" } else { "\n" });
        }
        out.push_str("]}\n");
        out
    }

    /// Header line plus one row per family; absent errors are empty cells.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("family,verdict,max_roundtrip_error_printed,max_roundtrip_error_implemented,note\n");
        let cell = |x: Option<f64>| x.map(|v| format!("{v:e}")).unwrap_or_default();
        for e in &self.entries {
            let verdict = serde_json::to_value(e.verdict).expect("verdict serializes");
            let _ = writeln!(
                out,
                "{},{},{},{},\"{}\"",
                e.family,
                verdict.as_str().unwrap_or_default(),
                cell(e.max_roundtrip_error_printed),
                cell(e.max_roundtrip_error_implemented),
                e.note.replace('"', "\"\"")
            );
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{default_verification_grid, validate};
    use super::*;

    #[test]
    fn weibull_verified_as_printed() {
        let s = validate(FamilyId::Weibull2, &[("a", 1.0), ("b", 1.0)]).unwrap();
        let e = verify_family(&s, &default_verification_grid()).unwrap();
        assert_eq!(e.verdict, Verdict::VerifiedAsPrinted);
        assert!(e.max_roundtrip_error_printed.unwrap() < 1e-14);
    }

    #[test]
    fn flexible_weibull_is_corrected() {
        let s = validate(FamilyId::FlexibleWeibull, &[("a", 1.0), ("b", 1.0)]).unwrap();
        let e = verify_family(&s, &default_verification_grid()).unwrap();
        assert_eq!(e.verdict, Verdict::CorrectedFormula);
        assert!(e.max_roundtrip_error_printed.unwrap() > 1e-8);
        assert!(e.max_roundtrip_error_implemented.unwrap() <= 1e-10);
    }

    #[test]
    fn xie_lai_has_no_closed_form() {
        let s = validate(FamilyId::XieLai3, &[("a", 1.0), ("b", 2.0), ("c", 1.0)]).unwrap();
        let e = verify_family(&s, &default_verification_grid()).unwrap();
        assert_eq!(e.verdict, Verdict::NoClosedForm);
        assert_eq!(e.max_roundtrip_error_printed, None);
    }

    #[test]
    fn small_grid_is_rejected() {
        let s = validate(FamilyId::Weibull2, &[("a", 1.0), ("b", 1.0)]).unwrap();
        assert!(verify_family(&s, &[0.5; 10]).is_err());
    }
}
