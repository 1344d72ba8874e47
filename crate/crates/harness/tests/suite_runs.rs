use dickson_core::identity::{rhs_closed_with, Conventions, IdentityCase, IdentityId, Symbol, T7Exponent, T8Sign};
use dickson_core::Complex64;
use dickson_harness::report::{read_jsonl, Status};
use dickson_harness::{evaluate_suite, run_suite, HarnessError, SuiteConfig};

fn config(body: &str, out: &std::path::Path) -> SuiteConfig {
    let text = format!("seed = 7\n{body}\n[tolerances]\nterminating = 1e-9\nconvergent = 1e-9\nasymptotic_factor = 10.0\n[output]\nformat = \"json\"\npath = {:?}\n", out.display().to_string());
    SuiteConfig::from_toml(&text).unwrap()
}

#[test]
fn rejects_malformed_suites() {
    let bad = [
        "seed = 1\n[[cases]]\nid = \"T9\"\ncount = 3\n",
        "seed = 1\n[[cases]]\nid = \"T1\"\ncount = 0\n",
        "seed = 1\n[[cases]]\nid = \"T1\"\ncount = 2\nbogus = 1\n",
        "seed = 1\n[[cases]]\nid = \"EX1\"\ncount = 2\nk = [\"1\"]\n",
        "seed = 1\n[[cases]]\nid = \"P1\"\ncount = 2\nfixed = { z = \"0.1\" }\n",
        "seed = 1\n[[cases]]\nid = \"T1\"\ncount = 2\n[cases.policy]\nmode = \"sometimes\"\n",
        "seed = 1\ncases = []\n",
        "seed = 1\n[[cases]]\nid = \"T1\"\ncount = 2\nk = [\"1\"]\nfixed = { k = \"2\" }\n",
    ];
    let tail = "[tolerances]\nterminating = 1e-9\nconvergent = 1e-9\nasymptotic_factor = 10.0\n[output]\nformat = \"json\"\npath = \"r.jsonl\"\n";
    assert!(SuiteConfig::from_toml(&format!("seed = 1\n[[cases]]\nid = \"T1\"\ncount = 2\n{tail}")).is_ok());
    let negative = tail.replace("convergent = 1e-9", "convergent = -1e-9");
    assert!(SuiteConfig::from_toml(&format!("seed = 1\n[[cases]]\nid = \"T1\"\ncount = 2\n{negative}")).is_err());
    for body in bad {
        let text = format!("{body}{tail}");
        let err = SuiteConfig::from_toml(&text).unwrap_err();
        assert!(matches!(err, HarnessError::Config(_)), "{text}");
        assert_eq!(err.exit_code(), 2);
    }
}

#[test]
fn pole_draws_are_reported_as_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config("[[cases]]\nid = \"P2\"\ncount = 4\nk = [\"2\"]\n", &dir.path().join("r.jsonl"));
    let summary = run_suite(&cfg).unwrap();
    assert_eq!((summary.total, summary.errored, summary.passed), (4, 4, 0));
    assert_eq!(summary.exit_code(), 1);
    let records = read_jsonl(&std::fs::read_to_string(&cfg.output.path).unwrap()).unwrap();
    assert!(records.iter().all(|r| r.status == Status::Error && r.error.as_deref().unwrap().contains("Γ(−k) pole")));
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let body = "[[cases]]\nid = \"T3\"\ncount = 6\nk = [\"1\", \"3\"]\n\
                [[cases]]\nid = \"T7\"\ncount = 5\nk = [\"2\"]\n\
                [[cases]]\nid = \"P1\"\ncount = 5\nk = [\"0.3\"]\n\
                [[cases]]\nid = \"EX2\"\nsampling = \"grid\"\ncount = 5\nfixed = { a = \"1\", alpha = \"1/4\" }\n";
    let a = config(body, &dir.path().join("a.jsonl"));
    let b = config(body, &dir.path().join("b.jsonl"));
    let sa = run_suite(&a).unwrap();
    run_suite(&b).unwrap();
    let (ta, tb) = (std::fs::read(&a.output.path).unwrap(), std::fs::read(&b.output.path).unwrap());
    assert_eq!(ta, tb);
    assert_eq!(sa.total, 12 + 5 + 5 + 5);
    assert_eq!(sa.passed, sa.total);

    let records = read_jsonl(std::str::from_utf8(&ta).unwrap()).unwrap();
    for r in &records {
        let id: IdentityId = r.case_id.parse().unwrap();
        let params = r.params.iter().map(|(k, v)| (k.parse::<Symbol>().unwrap(), Complex64::new(v.re, v.im))).collect();
        let case = IdentityCase::new(id, params).unwrap();
        let conv = Conventions {
            t7_exponent: T7Exponent::parse(&r.t7_exponent).unwrap(),
            t8_sign: T8Sign::parse(&r.t8_sign).unwrap(),
        };
        let want = r.rhs.unwrap();
        let got = rhs_closed_with(&case, conv).unwrap();
        let want = Complex64::new(want.re, want.im);
        assert!((got - want).norm() <= 1e-15 * want.norm(), "{} draw {}", r.case_id, r.draw);
    }
}

#[test]
fn ordering_is_by_entry_then_sweep_then_draw() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = config(
        "[[cases]]\nid = \"T1\"\ncount = 3\nk = [\"1\", \"2\"]\n[[cases]]\nid = \"T4\"\ncount = 2\nk = [\"1\"]\n",
        &dir.path().join("o.jsonl"),
    );
    let keys: Vec<_> = evaluate_suite(&cfg).into_iter().map(|r| (r.case_id, r.k_index, r.draw)).collect();
    let want: Vec<_> = [
        ("T1", 0, 0),
        ("T1", 0, 1),
        ("T1", 0, 2),
        ("T1", 1, 0),
        ("T1", 1, 1),
        ("T1", 1, 2),
        ("T4", 0, 0),
        ("T4", 0, 1),
    ]
    .into_iter()
    .map(|(a, b, c)| (a.to_string(), b, c))
    .collect();
    assert_eq!(keys, want);
}

#[test]
fn csv_reports_have_one_row_per_draw() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let text = format!(
        "seed = 3\n[[cases]]\nid = \"T8\"\ncount = 4\nk = [\"2\"]\n[tolerances]\nterminating = 1e-9\nconvergent = 1e-9\nasymptotic_factor = 10.0\n[output]\nformat = \"csv\"\npath = {:?}\n",
        path.display().to_string()
    );
    run_suite(&SuiteConfig::from_toml(&text).unwrap()).unwrap();
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!(csv.lines().next().unwrap().starts_with("case_id,"));
}
