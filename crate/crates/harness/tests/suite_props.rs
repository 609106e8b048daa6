use gruss_harness::report::SectionReport;
use gruss_harness::rng::trial_rng;
use gruss_harness::{
    emit_report, random_instance, run_suite, tightness_scan, FlavorChoice, HarnessError, ReportFormat,
    SuiteConfig, SuiteReport,
};

fn small(trials: usize) -> SuiteConfig {
    SuiteConfig {
        trials,
        ..SuiteConfig::default()
    }
}

#[test]
fn zero_trials_pass_vacuously() {
    let report = run_suite(&small(0)).unwrap();
    assert!(report.passed());
    assert!(report.sections.iter().all(|s| s.trials == 0 && s.max_tightness.is_none()));
}

#[test]
fn flavor_selects_sections() {
    let c = run_suite(&SuiteConfig { flavor: FlavorChoice::Cstar, ..small(5) }).unwrap();
    let h = run_suite(&SuiteConfig { flavor: FlavorChoice::Hstar, ..small(5) }).unwrap();
    assert!(c.section("3.8").is_some() && c.section("5.2").is_none());
    assert!(h.section("5.2").is_some() && h.section("3.8").is_none());
    for r in [&c, &h] {
        assert!(r.section("2.7").is_some());
        assert!(r.passed());
    }
}

#[test]
fn json_is_deterministic_and_reparses() {
    let render = |r: &SuiteReport| {
        let mut buf = Vec::new();
        emit_report(r, ReportFormat::Json, &mut buf).unwrap();
        buf
    };
    let a = render(&run_suite(&small(40)).unwrap());
    let b = render(&run_suite(&small(40)).unwrap());
    assert_eq!(a, b);
    let parsed: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let sections = parsed["sections"].as_array().unwrap();
    for key in ["inequality", "trials", "passes", "max_tightness", "max_residual"] {
        assert!(sections.iter().all(|s| s.get(key).is_some()), "missing {key}");
    }
    let typed: SuiteReport = serde_json::from_slice(&a).unwrap();
    assert_eq!(typed.sections.len(), sections.len());
}

#[test]
fn empty_report_is_header_only() {
    let report = SuiteReport::new(SuiteConfig::default());
    let mut buf = Vec::new();
    emit_report(&report, ReportFormat::Text, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("inequality"));
}

#[test]
fn one_failure_fails_the_report() {
    let mut report = SuiteReport::new(SuiteConfig::default());
    let mut s = SectionReport::new("3.8");
    s.trials = 2;
    s.passes = 1;
    report.sections.push(s);
    assert!(!report.passed());
}

#[test]
fn strict_mode_passing_set_is_a_subset() {
    let lax = run_suite(&small(60)).unwrap();
    let strict = run_suite(&SuiteConfig { strict_radius_mode: true, ..small(60) }).unwrap();
    for (l, s) in lax.sections.iter().zip(&strict.sections) {
        assert_eq!(l.inequality, s.inequality);
        assert!(s.passes <= l.passes || l.passes == l.trials);
        assert_eq!(s.passes, s.trials, "{} under strict radii", s.inequality);
    }
}

#[test]
fn scan_reaches_sharpness() {
    for id in ["3.8", "5.2"] {
        let r = tightness_scan(&small(20), id).unwrap();
        let t = r.sections[0].max_tightness.unwrap();
        assert!(t >= 1.0 - 1e-6, "{id}: {t}");
        assert!(r.passed());
    }
    let r = tightness_scan(&small(20), "4.15").unwrap();
    assert!((r.sections[0].max_tightness.unwrap() - 1.0).abs() <= 1e-9);
}

#[test]
fn scan_random_only_chain_is_reported() {
    // the 3.1 chain: reported, not asserted against 1
    let r = tightness_scan(&small(20), "3.1").unwrap();
    assert!(r.sections[0].max_tightness.is_some());
    assert!(r.passed());
}

#[test]
fn scan_is_monotone_in_trials() {
    for id in ["3.1", "3.8", "4.10", "5.7"] {
        let short = tightness_scan(&small(25), id).unwrap().sections[0].max_tightness.unwrap();
        let long = tightness_scan(&small(50), id).unwrap().sections[0].max_tightness.unwrap();
        assert!(long >= short, "{id}: {long} < {short}");
    }
}

#[test]
fn unknown_inequality() {
    assert!(matches!(
        tightness_scan(&small(1), "1.0"),
        Err(HarnessError::UnknownInequality(_))
    ));
}

#[test]
fn caps_are_enforced() {
    let bad = SuiteConfig { k_max: 33, ..small(1) };
    assert!(matches!(run_suite(&bad), Err(HarnessError::CapExceeded { .. })));
    let bad = SuiteConfig { slack_scale: -1.0, ..small(1) };
    assert!(matches!(run_suite(&bad), Err(HarnessError::InvalidConfig(_))));
}

#[test]
fn sampled_weights_sum_to_one() {
    for t in 0..200 {
        let inst = random_instance(&mut trial_rng(77, t, 0), 1, 1, 1 + (t as usize % 64), gruss::Flavor::CStar)
            .unwrap();
        let total: f64 = inst.p.as_slice().iter().sum();
        assert!((total - 1.0).abs() <= 1e-12);
    }
}
