//! Versioned text fixture of reference parameter sets.
//!
//! ```text
//! # comment
//! format lifequant-refsets 1
//! lai_weibull3 a=1 b=0.5 c=1
//! ```

use std::sync::OnceLock;

use super::{validate, DistributionSpec, FamilyId};
use crate::error::{Error, Result};

/// The bundled fixture.
pub const REFERENCE_FIXTURE: &str = include_str!("../../data/reference_params.txt");

const HEADER: &str = "format lifequant-refsets 1";

/// Parses a fixture, validating every record.
pub fn parse_reference_sets(text: &str) -> Result<Vec<DistributionSpec>> {
    let mut header_seen = false;
    let mut specs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            if line != HEADER {
                return Err(Error::Fixture {
                    line: line_no,
                    message: format!("expected `{HEADER}`, found `{line}`"),
                });
            }
            header_seen = true;
            continue;
        }
        let fixture_err = |message: String| Error::Fixture { line: line_no, message };

        let mut fields = line.split_whitespace();
        let family: FamilyId = fields
            .next()
            .unwrap_or_default()
            .parse()
            .map_err(|e: Error| fixture_err(e.to_string()))?;
        let mut params = Vec::new();
        for field in fields {
            let (k, v) = field
                .split_once('=')
                .ok_or_else(|| fixture_err(format!("expected name=value, found `{field}`")))?;
            let v: f64 = v
                .parse()
                .map_err(|_| fixture_err(format!("`{v}` is not a number")))?;
            params.push((k, v));
        }
        let spec = validate(family, &params).map_err(|e| fixture_err(e.to_string()))?;
        specs.push(spec);
    }
    if !header_seen {
        return Err(Error::Fixture {
            line: 0,
            message: "missing format header".into(),
        });
    }
    Ok(specs)
}

/// Parsed bundled fixture, in file order.
pub fn reference_sets() -> &'static [DistributionSpec] {
    static SETS: OnceLock<Vec<DistributionSpec>> = OnceLock::new();
    SETS.get_or_init(|| parse_reference_sets(REFERENCE_FIXTURE).expect("bundled fixture is valid"))
}
