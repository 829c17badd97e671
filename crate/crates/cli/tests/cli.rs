mod common;

use common::{golden_path, posetcalc, CASES};

#[test]
fn outputs_match_golden_files() {
    for &(name, file, args) in CASES {
        let out = posetcalc(args, file);
        let expected = std::fs::read(golden_path(name))
            .unwrap_or_else(|e| panic!("missing golden file {name}: {e}"));
        assert_eq!(
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&expected),
            "{name}"
        );
        assert_eq!(out.stdout, expected, "{name}");
    }
}

/// Rewrites every golden file from the current binary.
#[test]
#[ignore]
fn regenerate_golden_files() {
    for &(name, file, args) in CASES {
        std::fs::write(golden_path(name), posetcalc(args, file).stdout).unwrap();
    }
}

fn code(args: &[&str], file: &str) -> i32 {
    posetcalc(args, file).status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify"], "P.poset"), 0);
    assert_eq!(code(&["verify"], "Q.poset"), 0);
    assert_eq!(code(&["verify"], "malformed.poset"), 2);
    assert_eq!(code(&["poincare"], "duplicate.poset"), 2);
    assert_eq!(code(&["validate"], "partial_labels.poset"), 2);
    assert_eq!(code(&["validate"], "missing.poset"), 2);
    assert_eq!(code(&["validate"], "nongraded.poset"), 1);
    assert_eq!(code(&["verify"], "unbounded.poset"), 1);
    assert_eq!(code(&["rlabel-check"], "diamond_two_rising.poset"), 3);
    assert_eq!(code(&["rlabel-expand"], "diamond_two_rising.poset"), 3);
    assert_eq!(code(&["rlabel-check"], "q_labeled.poset"), 3);
    assert_eq!(code(&["rlabel-expand"], "Q.poset"), 3);
    assert_eq!(code(&["rlabel-check"], "boolean3.poset"), 0);
    assert_eq!(code(&["expsi", "--method", "sideways"], "P.poset"), 2);
    assert_eq!(
        code(&["expsi", "--tilde", "--method", "beta"], "P.poset"),
        2
    );
    assert_eq!(code(&["chow", "--frobnicate"], "P.poset"), 2);
}

#[test]
fn every_method_prints_the_same_index() {
    let reference = posetcalc(&["expsi"], "Q.poset").stdout;
    for m in ["chains", "omega", "recursive", "beta"] {
        assert_eq!(
            posetcalc(&["expsi", "--method", m], "Q.poset").stdout,
            reference,
            "{m}"
        );
    }
    let reference = posetcalc(&["expsi", "--tilde"], "Q.poset").stdout;
    for m in ["chains", "omega", "recursive"] {
        let out = posetcalc(&["expsi", "--tilde", "--method", m], "Q.poset").stdout;
        assert_eq!(out, reference, "{m}");
    }
    let reference = posetcalc(&["psi"], "Q.poset").stdout;
    for m in ["chains", "beta", "recursive"] {
        assert_eq!(
            posetcalc(&["psi", "--method", m], "Q.poset").stdout,
            reference,
            "{m}"
        );
    }
}

#[test]
fn quoted_fixture_values() {
    let text = |args: &[&str], file| String::from_utf8(posetcalc(args, file).stdout).unwrap();
    assert_eq!(
        text(&["chow", "--augmented"], "Q.poset"),
        "1 + 5x + 5x^2 + x^3\n"
    );
    assert_eq!(text(&["poincare"], "P.poset"), "1 + 3y + 2y^2\n");
    assert_eq!(
        text(&["expsi", "--method", "omega"], "P.poset"),
        "(1)·aa + (2 + 3y)·ab + (3y + 2y^2)·ba + (y^2)·bb\n"
    );
}

#[test]
fn structured_output_is_json() {
    let out = posetcalc(&["expsi", "--format", "structured"], "P.poset");
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["degree"], 2);
    assert_eq!(v["terms"]["ba"], serde_json::json!([0, 3, 2]));
}

#[test]
fn failures_report_on_stderr_only() {
    let out = posetcalc(&["validate"], "nongraded.poset");
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("not graded"));
}
