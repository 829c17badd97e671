#![allow(dead_code)]

//! Helpers shared by the CLI test targets.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).to_path_buf()
}

pub fn input(name: &str) -> PathBuf {
    let fixtures = root().join("../core/fixtures").join(name);
    if fixtures.exists() {
        fixtures
    } else {
        root().join("tests/data").join(name)
    }
}

pub fn posetcalc(args: &[&str], file: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_posetcalc"))
        .args(args)
        .arg("--input")
        .arg(input(file))
        .output()
        .expect("binary runs")
}

/// (golden file, input, arguments)
pub const CASES: &[(&str, &str, &[&str])] = &[
    ("P.validate", "P.poset", &["validate"]),
    ("P.mobius", "P.poset", &["mobius"]),
    ("P.poincare", "P.poset", &["poincare"]),
    ("P.charpoly", "P.poset", &["charpoly"]),
    ("P.psi", "P.poset", &["psi"]),
    ("P.psi-tilde", "P.poset", &["psi", "--tilde"]),
    ("P.expsi", "P.poset", &["expsi", "--method", "omega"]),
    ("P.expsi-tilde", "P.poset", &["expsi", "--tilde"]),
    ("P.flag", "P.poset", &["flag"]),
    ("P.chow", "P.poset", &["chow"]),
    ("P.chow-augmented", "P.poset", &["chow", "--augmented"]),
    ("P.gamma-augmented", "P.poset", &["gamma", "--augmented"]),
    ("P.rlabel-check", "P.poset", &["rlabel-check"]),
    ("P.rlabel-expand", "P.poset", &["rlabel-expand"]),
    ("P.verify", "P.poset", &["verify"]),
    (
        "P.expsi.json",
        "P.poset",
        &["expsi", "--format", "structured"],
    ),
    (
        "P.flag.json",
        "P.poset",
        &["flag", "--format", "structured"],
    ),
    (
        "P.rlabel-expand.json",
        "P.poset",
        &["rlabel-expand", "--format", "structured"],
    ),
    ("Q.validate", "Q.poset", &["validate"]),
    ("Q.mobius", "Q.poset", &["mobius"]),
    ("Q.poincare", "Q.poset", &["poincare"]),
    ("Q.charpoly", "Q.poset", &["charpoly"]),
    ("Q.psi", "Q.poset", &["psi"]),
    ("Q.psi-tilde", "Q.poset", &["psi", "--tilde"]),
    ("Q.expsi", "Q.poset", &["expsi"]),
    ("Q.expsi-tilde", "Q.poset", &["expsi", "--tilde"]),
    ("Q.flag", "Q.poset", &["flag"]),
    ("Q.chow", "Q.poset", &["chow"]),
    ("Q.chow-augmented", "Q.poset", &["chow", "--augmented"]),
    ("Q.gamma", "Q.poset", &["gamma"]),
    ("Q.gamma-augmented", "Q.poset", &["gamma", "--augmented"]),
    ("Q.verify", "Q.poset", &["verify"]),
    (
        "Q.gamma-augmented.json",
        "Q.poset",
        &["gamma", "--augmented", "--format", "structured"],
    ),
    (
        "Q.validate.json",
        "Q.poset",
        &["validate", "--format", "structured"],
    ),
    (
        "Q.verify.json",
        "Q.poset",
        &["verify", "--format", "structured"],
    ),
    ("B3.expsi", "boolean3.poset", &["expsi"]),
    (
        "B3.chow-augmented",
        "boolean3.poset",
        &["chow", "--augmented"],
    ),
    ("B3.verify", "boolean3.poset", &["verify"]),
    (
        "diamond.rlabel-check",
        "diamond_two_rising.poset",
        &["rlabel-check"],
    ),
];

pub fn golden_path(name: &str) -> PathBuf {
    root().join("tests/golden").join(format!("{name}.out"))
}

/// Names of the golden cases whose output differs from the committed file.
pub fn golden_mismatches() -> Vec<&'static str> {
    CASES
        .iter()
        .filter(|&&(name, file, args)| {
            std::fs::read(golden_path(name)).ok() != Some(posetcalc(args, file).stdout)
        })
        .map(|&(name, _, _)| name)
        .collect()
}
