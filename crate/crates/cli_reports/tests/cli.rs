use std::process::Command;

use cli_reports::*;

fn akv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_akv")).args(args).output().unwrap()
}

#[test]
fn suite_names_parse_and_unknown_ones_are_rejected() {
    assert_eq!(parse_suites("frames, brst,frames").unwrap(), vec![Suite::Frames, Suite::Brst]);
    assert_eq!(parse_suites("all").unwrap(), Suite::ALL.to_vec());
    assert_eq!(parse_suites("").unwrap(), vec![]);
    assert_eq!(parse_suites("frames,bogus"), Err(ConfigError::UnknownSuite("bogus".into())));
    assert_eq!(parse_tolerance("brst=1e-3").unwrap(), (Suite::Brst, 1e-3));
    assert!(parse_tolerance("brst").is_err());
    assert!(parse_tolerance("brst=-1").is_err());
    assert!(parse_tolerance("nope=1").is_err());
}

#[test]
fn tolerance_table() {
    assert_eq!(default_tolerance(Suite::Frames, "RA1"), 1e-10);
    assert_eq!(default_tolerance(Suite::Frames, "CSF"), 1e-8);
    assert_eq!(default_tolerance(Suite::Brst, "T61a"), 1e-7);
    assert_eq!(default_tolerance(Suite::Brst, "nil-P"), 1e-6);
    assert_eq!(default_tolerance(Suite::Brst, "Ppp-phe"), 1e-10);
    assert_eq!(default_tolerance(Suite::Witten, "T71d"), 1e-6);
    for s in Suite::ALL {
        assert!(TOLERANCES.iter().any(|(x, p, _)| *x == s && *p == "*"), "{s}");
    }
}

#[test]
fn config_is_validated() {
    assert_eq!(run_suite(&SuiteConfig::new("torus", &[])).unwrap_err(), ConfigError::UnknownManifold("torus".into()));
    assert_eq!(run_suite(&SuiteConfig::new("sphere", &[]).points(0)).unwrap_err(), ConfigError::NoPoints);
}

#[test]
fn empty_suite_list_passes_with_no_records() {
    let r = run_suite(&SuiteConfig::new("nilmanifold", &[])).unwrap();
    assert!(r.checks.is_empty() && r.info.is_empty());
    assert_eq!(r.status, Status::Pass);
}

#[test]
fn flat_model_passes_everything() {
    let r = run_suite(&SuiteConfig::new("flat_kahler", &Suite::ALL).points(5)).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    for c in r.checks.iter().filter(|c| c.bound == Bound::Below) {
        assert!(c.residual() < 1e-10, "{}", c.id);
    }
}

#[test]
fn nilmanifold_nijenhuis_is_certified() {
    let r = run_suite(&SuiteConfig::new("nilmanifold", &[Suite::Nijenhuis])).unwrap();
    assert!(r.passed());
    assert_eq!(r.check("N-nonzero").unwrap().residual(), 1.0);
    assert_eq!(r.check("N-oracle").unwrap().residual(), 0.0);
}

#[test]
fn check_ids_are_unique_and_carry_anchors() {
    let r = run_suite(&SuiteConfig::new("sphere", &Suite::ALL).points(2)).unwrap();
    let mut ids: Vec<_> = r.checks.iter().map(|c| (c.suite, c.id.clone())).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
    for id in ["RA1", "CSF-cot", "A13", "A-DJ", "E3", "T21", "P3-witness", "T41", "T61c", "nil-P", "T71d", "N-vanishing"] {
        assert!(r.check(id).is_some(), "{id}");
    }
    assert!(r.checks.iter().all(|c| !c.anchor.is_empty()));
    assert_eq!(r.status == Status::Pass, r.checks.iter().all(|c| c.pass));
}

#[test]
fn overrides_replace_upper_bounds_only() {
    let mut cfg = SuiteConfig::new("nilmanifold", &[Suite::Witten, Suite::Nijenhuis]).points(2);
    assert!(!run_suite(&cfg).unwrap().passed());
    cfg.tolerance_overrides.insert(Suite::Witten, 10.0);
    cfg.tolerance_overrides.insert(Suite::Nijenhuis, 1e-3);
    let r = run_suite(&cfg).unwrap();
    assert!(r.passed(), "{}", r.to_text());
    assert_eq!(r.check("N-nonzero").unwrap().tolerance, "1e-1");
}

#[test]
fn json_round_trip_and_determinism() {
    let cfg = SuiteConfig::new("sphere", &[Suite::Frames, Suite::Currents, Suite::Brst]).points(3).seed(7);
    let a = run_suite(&cfg).unwrap();
    let back = SuiteReport::from_json(&a.to_json()).unwrap();
    assert_eq!(back, a);
    let b = run_suite(&cfg).unwrap();
    assert_eq!(a.to_json_timeless(), b.to_json_timeless());
    let c = run_suite(&cfg.clone().seed(8)).unwrap();
    assert_ne!(a.to_json_timeless(), c.to_json_timeless());
}

#[test]
fn text_has_one_line_per_check() {
    let r = run_suite(&SuiteConfig::new("nilmanifold", &[Suite::Darboux, Suite::Nijenhuis]).points(2)).unwrap();
    let t = r.to_text();
    let checks = t.lines().filter(|l| l.starts_with("PASS ") || l.starts_with("FAIL ")).count();
    assert_eq!(checks, r.checks.len() + 1);
    let mut buf = Vec::new();
    emit_report(&r, Format::Json, &mut buf).unwrap();
    assert_eq!(SuiteReport::from_json(std::str::from_utf8(&buf).unwrap()).unwrap(), r);
}

#[test]
fn binary_exit_codes() {
    let dir = std::env::temp_dir().join(format!("akv-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let ok = akv(&["verify", "--manifold", "flat_kahler", "--suite", "frames,nijenhuis", "--points", "3", "--format", "text"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("PASS frames/RA1"));

    // failing check: exit 1, JSON still written
    let out = dir.join("fail.json");
    let fail = akv(&["verify", "--manifold", "nilmanifold", "--suite", "witten", "--points", "2", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(fail.status.code(), Some(1));
    let r = SuiteReport::from_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r.status, Status::Fail);
    assert!(!r.check("T71d").unwrap().pass);

    let pass = akv(&["verify", "--manifold", "nilmanifold", "--suite", "witten", "--points", "2", "--tolerance", "witten=10"]);
    assert_eq!(pass.status.code(), Some(0));

    for bad in [
        vec!["verify", "--manifold", "torus"],
        vec!["verify", "--manifold", "sphere", "--suite", "frames,bogus"],
        vec!["verify", "--manifold", "sphere", "--points", "0"],
        vec!["verify", "--manifold", "sphere", "--tolerance", "frames"],
        vec!["verify", "--manifold", "sphere", "--format", "xml"],
        vec!["manifolds", "show", "torus"],
        vec!["frobnicate"],
    ] {
        let o = akv(&bad);
        assert_eq!(o.status.code(), Some(2), "{bad:?}");
        assert!(o.stdout.is_empty(), "{bad:?}");
    }
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn binary_json_is_byte_identical_apart_from_wall_time() {
    let run = || {
        let o = akv(&["verify", "--manifold", "sphere", "--suite", "all", "--points", "2", "--seed", "5", "--format", "json"]);
        assert_eq!(o.status.code(), Some(1));
        let s = String::from_utf8(o.stdout).unwrap();
        s.lines().filter(|l| !l.contains("\"wall_time_s\"")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run(), run());
}

#[test]
fn manifolds_list_and_show() {
    let o = akv(&["manifolds", "list"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&o.stdout).lines().collect::<Vec<_>>(), ["flat_kahler", "sphere", "nilmanifold"]);
    let o = akv(&["manifolds", "show", "sphere"]);
    assert_eq!(o.status.code(), Some(0));
    let s = String::from_utf8_lossy(&o.stdout);
    assert!(s.contains("sphere (dim 2)") && s.contains("sin"), "{s}");
}
