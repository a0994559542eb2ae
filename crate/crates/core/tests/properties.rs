use lifequant::lambert_w::{identity_residual, tree_t, w_lower, w_principal, w_series};
use lifequant::special::{std_normal_cdf, std_normal_pdf, std_normal_quantile};
use lifequant::{reference_sets, FamilyId};
use proptest::prelude::*;

const INV_E: f64 = 0.367_879_441_171_442_33;

fn analytic_set() -> impl Strategy<Value = usize> {
    let idx: Vec<usize> = reference_sets()
        .iter()
        .enumerate()
        .filter(|(_, s)| s.family().has_analytic_quantile())
        .map(|(i, _)| i)
        .collect();
    proptest::sample::select(idx)
}

proptest! {
    #[test]
    fn w0_satisfies_identity(x in -INV_E + 1e-9..1e12f64) {
        let w = w_principal(x).unwrap();
        prop_assert!(w.value >= -1.0);
        prop_assert!(identity_residual(x, w.value) <= 1e-13 || (w.value * w.value.exp() - x).abs() <= 1e-15);
    }

    #[test]
    fn w_lower_satisfies_identity(x in -INV_E + 1e-9..-1e-300f64) {
        let w = w_lower(x).unwrap().value;
        prop_assert!(w <= -1.0);
        prop_assert!((w * w.exp() - x).abs() <= 1e-15 * x.abs().max(1e-300) * 8.0 + 1e-300);
    }

    #[test]
    fn w0_is_increasing(x in -0.36..1e6f64, dx in 1e-6..1.0f64) {
        let a = w_principal(x).unwrap().value;
        let b = w_principal(x + dx * (1.0 + x.abs())).unwrap().value;
        prop_assert!(b > a);
    }

    #[test]
    fn w0_derivative_matches_implicit_form(x in 0.01..100.0f64) {
        // W'(x) = W / (x (1 + W))
        let h = 1e-6 * x;
        let w = w_principal(x).unwrap().value;
        let fd = (w_principal(x + h).unwrap().value - w_principal(x - h).unwrap().value) / (2.0 * h);
        let exact = w / (x * (1.0 + w));
        prop_assert!((fd - exact).abs() <= 1e-6 * exact.abs());
    }

    #[test]
    fn series_matches_w0_near_zero(x in -0.1..0.1f64) {
        let s = w_series(x, 30).unwrap();
        let w = w_principal(x).unwrap().value;
        prop_assert!((s - w).abs() <= 1e-12);
    }

    #[test]
    fn tree_function_fixed_point(x in -5.0..INV_E) {
        let t = tree_t(x).unwrap();
        prop_assert!((t - x * t.exp()).abs() <= 1e-14 * t.abs().max(1.0));
    }

    #[test]
    fn normal_quantile_roundtrip(e in 0.0..12.0f64, upper in any::<bool>()) {
        let p = 10f64.powf(-e) * 0.5;
        let p = if upper { 1.0 - p } else { p };
        let z = std_normal_quantile(p).unwrap();
        prop_assert!((std_normal_cdf(z) - p).abs() <= 1e-10 * p.min(1.0 - p).max(1e-6));
    }

    #[test]
    fn normal_density_is_cdf_slope(x in -6.0..6.0f64) {
        let h = 1e-5;
        let fd = (std_normal_cdf(x + h) - std_normal_cdf(x - h)) / (2.0 * h);
        prop_assert!((fd - std_normal_pdf(x)).abs() <= 1e-9);
    }

    #[test]
    fn quantile_roundtrip_and_order(i in analytic_set(), u in 1e-6..(1.0 - 1e-6), v in 1e-6..(1.0 - 1e-6)) {
        let s = &reference_sets()[i];
        let qu = s.quantile(u).unwrap();
        prop_assert!(qu.roundtrip_residual <= 1e-9, "{} u={}", s.family(), u);
        let qv = s.quantile(v).unwrap();
        if u < v {
            prop_assert!(qu.t <= qv.t);
        }
        prop_assert!(s.support().contains(qu.t));
    }

    #[test]
    fn lambert_arguments_are_nonnegative(i in analytic_set(), u in 1e-9..(1.0 - 1e-9)) {
        let s = &reference_sets()[i];
        if let Some(x) = s.lambert_argument(u) {
            prop_assert!(x >= 0.0, "{} u={} x={}", s.family(), u, x);
        }
    }

    #[test]
    fn survival_is_nonincreasing(i in 0..84usize, a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let s = &reference_sets()[i % reference_sets().len()];
        let lo = s.numeric_quantile(a.clamp(1e-9, 1.0 - 1e-9), 1e-12).unwrap().t;
        let hi = s.numeric_quantile(b.clamp(1e-9, 1.0 - 1e-9), 1e-12).unwrap().t;
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        prop_assert!(s.survival(lo) >= s.survival(hi));
        prop_assert!((s.cdf(lo) + s.survival(lo) - 1.0).abs() <= f64::EPSILON);
    }
}

#[test]
fn every_lambert_family_is_covered_by_argument_check() {
    let lambert: Vec<FamilyId> = FamilyId::ALL.into_iter().filter(|f| f.info().lambert).collect();
    assert_eq!(lambert.len(), 10);
    for f in lambert {
        let s = reference_sets().iter().find(|s| s.family() == f).unwrap();
        assert!(s.lambert_argument(0.5).is_some(), "{f}");
    }
}
