use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use efalg_core::catalog::{catalog_entry, make_chain, named_catalog};
use efalg_core::format::{parse_effect_algebra, serialize};
use efalg_core::{ElementId, FiniteEffectAlgebra, PartialAlgebra};
use serde_json::Value;
use tempfile::TempDir;

fn efalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_efalg"))
        .args(args)
        .env_remove("EFALG_JOBS")
        .output()
        .unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// The JSON failure document on the last stderr line.
fn failure(out: &Output) -> Value {
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    serde_json::from_str(err.lines().last().unwrap()).unwrap()
}

fn write_algebra(dir: &Path, name: &str, e: &FiniteEffectAlgebra) -> PathBuf {
    let path = dir.join(format!("{name}.efa"));
    fs::write(&path, serialize(e)).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn roundtrip_on_three_chain_passes() {
    let dir = TempDir::new().unwrap();
    let file = write_algebra(dir.path(), "chain3", &make_chain(2).unwrap());
    let out = efalg(&["roundtrip", s(&file)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("ok:"));
}

#[test]
fn iso_finds_permuted_copy() {
    let dir = TempDir::new().unwrap();
    let e = catalog_entry("product_chain3_chain2").unwrap().algebra;
    let perm: Vec<ElementId> = (0..e.order()).rev().map(ElementId::new).collect();
    let a = write_algebra(dir.path(), "a", &e);
    let b = write_algebra(dir.path(), "b", &e.relabel(&perm));
    let out = efalg(&["iso", s(&a), s(&b)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("isomorphic\n"));
    assert_eq!(stdout(&out).lines().count(), 1 + e.order());

    let c = write_algebra(dir.path(), "c", &make_chain(5).unwrap());
    let out = efalg(&["iso", s(&a), s(&c)]);
    assert_eq!(code(&out), 1);
    assert_eq!(failure(&out)["kind"], "iso");
}

#[test]
fn triple_on_non_homogeneous_algebra_is_a_hypothesis_failure() {
    let dir = TempDir::new().unwrap();
    let file = write_algebra(
        dir.path(),
        "nh",
        &catalog_entry("nonhomogeneous6").unwrap().algebra,
    );
    for args in [
        vec!["triple", s(&file), "--out", s(dir.path())],
        vec!["roundtrip", s(&file)],
    ] {
        let out = efalg(&args);
        assert_eq!(code(&out), 2);
        let f = failure(&out);
        assert_eq!(f["schema"], "efalg-failure/1");
        assert_eq!(f["kind"], "hypothesis");
        assert_eq!(f["detail"]["witness"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn triple_files_rebuild_an_isomorphic_algebra() {
    let dir = TempDir::new().unwrap();
    let e = catalog_entry("hsum_chain4_boolean4").unwrap().algebra;
    let file = write_algebra(dir.path(), "e", &e);
    let triple_dir = dir.path().join("triple");
    assert_eq!(
        code(&efalg(&["triple", s(&file), "--out", s(&triple_dir)])),
        0
    );
    for f in ["sharp.efa", "meager.gea", "h.txt"] {
        assert!(triple_dir.join(f).exists());
    }
    let rebuilt = dir.path().join("rebuilt.efa");
    assert_eq!(
        code(&efalg(&["rebuild", s(&triple_dir), "--out", s(&rebuilt)])),
        0
    );
    assert_eq!(code(&efalg(&["verify", s(&rebuilt)])), 0);
    assert_eq!(code(&efalg(&["iso", s(&file), s(&rebuilt)])), 0);
}

#[test]
fn verify_exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad_axioms = dir.path().join("bad.efa");
    fs::write(
        &bad_axioms,
        "efa 1\norder 3\nzero 0\none 2\nsum 0 0 0\nsum 0 1 1\nsum 0 2 2\n",
    )
    .unwrap();
    let out = efalg(&["verify", s(&bad_axioms)]);
    assert_eq!(code(&out), 1);
    assert_eq!(failure(&out)["kind"], "axioms");

    let duplicate = dir.path().join("dup.efa");
    fs::write(
        &duplicate,
        "efa 1\norder 3\nzero 0\none 2\nsum 1 1 2\nsum 1 1 0\n",
    )
    .unwrap();
    let out = efalg(&["verify", s(&duplicate)]);
    assert_eq!(code(&out), 3);
    assert!(failure(&out)["detail"]["message"]
        .as_str()
        .unwrap()
        .contains("line 6"));

    assert_eq!(
        code(&efalg(&["verify", s(&dir.path().join("missing.efa"))])),
        3
    );
    assert_eq!(code(&efalg(&["analyze", s(&bad_axioms)])), 3);
    assert_eq!(code(&efalg(&["no-such-command"])), 3);

    let gea = dir.path().join("n.gea");
    fs::write(
        &gea,
        "gea 1\norder 3\nzero 0\nsum 0 0 0\nsum 0 1 1\nsum 0 2 2\nsum 1 1 2\n",
    )
    .unwrap();
    assert_eq!(code(&efalg(&["verify", s(&gea)])), 0);
}

#[test]
fn gen_kinds() {
    let dir = TempDir::new().unwrap();
    let out = efalg(&["gen", "--kind", "chain", "--n", "3"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        parse_effect_algebra(&stdout(&out)).unwrap(),
        make_chain(3).unwrap()
    );

    let c3 = write_algebra(dir.path(), "c3", &make_chain(2).unwrap());
    let out = efalg(&["gen", "--kind", "hsum", "--input", s(&c3), s(&c3)]);
    assert_eq!(
        parse_effect_algebra(&stdout(&out)).unwrap(),
        catalog_entry("diamond").unwrap().algebra
    );

    let out = efalg(&["gen", "--kind", "product", "--input", s(&c3)]);
    assert_eq!(code(&out), 3);
    assert_eq!(code(&efalg(&["gen", "--kind", "boolean"])), 3);
    assert_eq!(code(&efalg(&["gen", "--kind", "chain", "--n", "0"])), 3);
    assert_eq!(code(&efalg(&["gen", "--kind", "boolean", "--n", "2"])), 0);
}

#[test]
fn enumerate_writes_files_and_respects_the_bound() {
    let dir = TempDir::new().unwrap();
    let out = efalg(&["enumerate", "--max-order", "5", "--out", s(dir.path())]);
    assert_eq!(code(&out), 0);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1 + 1 + 3 + 4);
    for entry in fs::read_dir(dir.path()).unwrap() {
        parse_effect_algebra(&fs::read_to_string(entry.unwrap().path()).unwrap()).unwrap();
    }
    let out = efalg(&["enumerate", "--max-order", "7", "--out", s(dir.path())]);
    assert_eq!(code(&out), 3);
    assert!(failure(&out)["detail"]["message"]
        .as_str()
        .unwrap()
        .contains("search nodes"));
}

#[test]
fn suite_reports_every_row() {
    let out = efalg(&["suite", "--max-order", "4", "--json"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["failed"] == 0));
    assert!(checks.iter().any(|c| c["anchor"] == "blocksar"));
    assert_eq!(code(&efalg(&["suite", "--max-order", "7"])), 3);
}

#[test]
fn bad_worker_count_is_an_input_error() {
    let out = Command::new(env!("CARGO_BIN_EXE_efalg"))
        .args(["suite", "--max-order", "3"])
        .env("EFALG_JOBS", "0")
        .output()
        .unwrap();
    assert_eq!(code(&out), 3);
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Set `EFALG_UPDATE_GOLDEN=1` to rewrite the files after a verified change.
#[test]
fn analyze_json_matches_golden_files() {
    let dir = TempDir::new().unwrap();
    let update = std::env::var_os("EFALG_UPDATE_GOLDEN").is_some();
    for entry in named_catalog() {
        let file = write_algebra(dir.path(), &entry.name, &entry.algebra);
        let out = efalg(&["analyze", s(&file), "--json"]);
        assert_eq!(code(&out), 0);
        let golden = golden_dir().join(format!("{}.json", entry.name));
        if update {
            fs::write(&golden, stdout(&out)).unwrap();
        }
        assert_eq!(
            stdout(&out),
            fs::read_to_string(&golden).unwrap(),
            "{}",
            entry.name
        );
    }
}
