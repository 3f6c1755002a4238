use std::io::Write;

use ordgroups::suite::{run_criterion, run_suite, SuiteConfig, CRITERIA};

#[test]
fn acceptance_criteria() {
    let report = run_suite(&SuiteConfig::default());
    // written to the raw handle so the lines survive output capture
    let mut out = std::io::stderr().lock();
    for c in &report.criteria {
        writeln!(out, "{}", c.summary()).unwrap();
        for check in c.checks.iter().filter(|k| !k.pass) {
            let detail = check.detail.as_ref().map(|d| d.to_string()).unwrap_or_default();
            writeln!(out, "    failed: {} {detail}", check.name).unwrap();
        }
    }
    drop(out);
    assert_eq!(report.criteria.len(), CRITERIA.len());
    assert!(report.pass, "some acceptance criteria failed");
}

#[test]
fn single_sample_passes() {
    let cfg = SuiteConfig { samples: 1, ..SuiteConfig::default() };
    let report = run_suite(&cfg);
    for c in &report.criteria {
        assert!(c.pass, "{}", c.summary());
    }
}

#[test]
fn tiny_tolerance_fails_with_locations() {
    let cfg = SuiteConfig { abs_tol: 1e-18, rel_tol: 0.0, ..SuiteConfig::default() };
    let c = run_criterion(8, &cfg);
    assert!(!c.pass);
    let failing = c.checks.iter().find(|k| !k.pass).expect("a failing check");
    let at = &failing.detail.as_ref().expect("location")["at"];
    assert!(at.is_array(), "{failing:?}");
}

#[test]
fn seeded_runs_repeat() {
    let cfg = SuiteConfig { samples: 50, seed: 7, ..SuiteConfig::default() };
    assert_eq!(run_criterion(3, &cfg), run_criterion(3, &cfg));
}
