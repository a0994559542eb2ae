use std::process::{Command, Output};

use lifequant::sampler::{sample, SampleMethod};
use lifequant::{validate, FamilyId};

fn lifequant(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lifequant"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn exponential_median() {
    let o = lifequant(&["quantile", "--family", "weibull2", "--param", "a=1", "--param", "b=1", "--u", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.6931471805599453\n");
}

#[test]
fn sample_csv_is_reproducible_and_matches_library() {
    let args = [
        "sample", "--family", "lai_weibull3", "--param", "a=1", "--param", "b=1", "--param", "c=1", "--n", "5",
        "--seed", "42", "--format", "csv",
    ];
    let first = stdout(&lifequant(&args));
    assert_eq!(first, stdout(&lifequant(&args)));
    let lines: Vec<&str> = first.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[0], "value");

    let spec = validate(FamilyId::LaiWeibull3, &[("a", 1.0), ("b", 1.0), ("c", 1.0)]).unwrap();
    let lib = sample(&spec, 5, 42, SampleMethod::Auto).unwrap();
    for (line, v) in lines[1..].iter().zip(&lib.values) {
        assert_eq!(line.parse::<f64>().unwrap().to_bits(), v.to_bits());
    }
}

#[test]
fn errata_json_names_numeric_only_families() {
    let o = lifequant(&["errata", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains(r#"{"family":"xie_lai3","verdict":"NoClosedForm""#), "{text}");
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["entries"].as_array().unwrap().len(), 28);
}

#[test]
fn errata_csv_has_a_row_per_family() {
    let o = lifequant(&["errata", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 29);
}

#[test]
fn parameter_errors_exit_2_and_name_the_constraint() {
    let o = lifequant(&["quantile", "--family", "pham", "--param", "a=1", "--param", "b=2", "--u", "0.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("a must exceed 1"));

    for args in [
        &["quantile", "--family", "weibull2", "--param", "a=1", "--param", "q=1", "--u", "0.5"][..],
        &["quantile", "--family", "weibull2", "--param", "a=1", "--u", "0.5"],
        &["quantile", "--family", "weibull2", "--param", "a=1", "--param", "b=1", "--u", "1"],
        &["quantile", "--family", "nope", "--u", "0.5"],
        &["quantile", "--family", "xie_lai3", "--param", "a=1", "--param", "b=2", "--param", "c=1", "--u", "0.5", "--method", "analytic"],
        &["sample", "--family", "weibull2", "--param", "a=1", "--param", "b=1", "--n", "3", "--seed", "1", "--format", "xml"],
        &["frobnicate"],
    ] {
        assert_eq!(lifequant(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn numeric_failure_exits_3_with_residual() {
    // The CDF jumps by more than 1e-12 between adjacent doubles here.
    let o = lifequant(&[
        "quantile", "--family", "shifted_mod_weibull", "--param", "a=2", "--param", "b=0.5", "--param", "c=1",
        "--param", "d=1", "--u", "1e-6", "--method", "numeric",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("residual"));
}

#[test]
fn numeric_only_family_goes_through_numeric_path() {
    let o = lifequant(&[
        "quantile", "--family", "xie_lai3", "--param", "a=1", "--param", "b=2", "--param", "c=1", "--u", "0.25",
        "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["path"], "Numeric");
    assert!(v["roundtrip_residual"].as_f64().unwrap() <= 1e-12);
}

#[test]
fn cdf_and_sf_match_library_exactly() {
    let spec = validate(FamilyId::ModLogLogistic, &[("a", 1.0), ("b", 1.0), ("c", 1.0)]).unwrap();
    for t in ["0.1", "0.5671432904097838", "3"] {
        let base = ["--family", "mod_log_logistic", "--param", "a=1", "--param", "b=1", "--param", "c=1", "--t", t];
        let cdf: f64 = stdout(&lifequant(&[&["cdf"][..], &base].concat())).trim().parse().unwrap();
        let sf: f64 = stdout(&lifequant(&[&["sf"][..], &base].concat())).trim().parse().unwrap();
        let t: f64 = t.parse().unwrap();
        assert_eq!(cdf.to_bits(), spec.cdf(t).to_bits());
        assert_eq!(sf.to_bits(), spec.survival(t).to_bits());
    }
}

#[test]
fn negative_arguments_are_accepted() {
    let o = lifequant(&["cdf", "--family", "trunc_log_weibull", "--param", "a=-1", "--param", "b=3", "--t", "-2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn list_prints_every_family() {
    let text = stdout(&lifequant(&["list"]));
    assert_eq!(text.lines().count(), 29);
    for f in FamilyId::ALL {
        assert!(text.lines().any(|l| l.starts_with(&format!("{f},"))), "{f}");
    }
}

#[test]
fn help_enumerates_families() {
    let text = stdout(&lifequant(&["--help"]));
    assert!(text.contains("gompertz_makeham") && text.contains("a > 1, b > 0"));
}

#[test]
fn verify_single_set_and_whole_catalog() {
    let o = lifequant(&["verify", "--family", "flexible_weibull", "--param", "a=1", "--param", "b=1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""verdict":"CorrectedFormula""#));
    let all = lifequant(&["verify"]);
    assert_eq!(all.status.code(), Some(0));
    assert_eq!(stdout(&all).lines().count(), 30);
}

#[test]
fn ks_reads_sample_files() {
    let dir = std::env::temp_dir().join(format!("lifequant-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sample.csv");
    let drawn = lifequant(&["sample", "--family", "weibull2", "--param", "a=1", "--param", "b=1", "--n", "2000", "--seed", "9"]);
    std::fs::write(&path, drawn.stdout).unwrap();
    let p = path.to_str().unwrap();

    let ok = stdout(&lifequant(&["ks", "--family", "weibull2", "--param", "a=1", "--param", "b=1", "--input", p]));
    let d_sqrt_n: f64 = ok.lines().nth(1).unwrap().split(',').nth(2).unwrap().parse().unwrap();
    assert!(d_sqrt_n < 1.95);

    let bad = stdout(&lifequant(&["ks", "--family", "weibull2", "--param", "a=1", "--param", "b=2", "--input", p]));
    let d: f64 = bad.lines().nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert!(d > 0.05);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sample_json_echoes_spec_and_seed() {
    let o = lifequant(&[
        "sample", "--family", "gompertz_makeham", "--param", "a=1", "--param", "b=1", "--param", "c=1", "--n", "3",
        "--seed", "11", "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["seed"], 11);
    assert_eq!(v["params"]["c"], 1.0);
    assert_eq!(v["algorithm"], "chacha20");
    assert_eq!(v["values"].as_array().unwrap().len(), 3);
}
