//! End-to-end checks of the `engel` binary: exit codes, output shape and
//! reproducibility across thread counts.

use std::process::{Command, Output};

fn engel(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_engel"));
    cmd.args(args).env_remove("ENGEL_JOBS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    engel(args, &[]).status.code().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["verify"]), 0);
    assert_eq!(code(&["verify", "--lie-engel", "5"]), 0);
    assert_eq!(code(&["verify", "--group-engel", "5"]), 1);
    assert_eq!(code(&["verify", "--group-engel", "5", "--expect", "fail"]), 0);
    assert_eq!(code(&["verify", "--lie-engel", "4"]), 1);
    assert_eq!(code(&["--char", "5", "verify"]), 2);
    assert_eq!(code(&["--char", "4", "build"]), 2);
    assert_eq!(code(&["--spec", "/nonexistent/spec.toml", "build"]), 2);
    assert_eq!(code(&["verify", "--lie-engel", "0"]), 1);
    assert_eq!(code(&["verify", "--no-such-flag"]), 2);
}

#[test]
fn bad_document_reports_position() {
    let dir = std::env::temp_dir().join(format!("engel-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.toml");
    std::fs::write(
        &path,
        "generators = [\"x\", \"y\"]\n[[relations]]\nkind = \"degree_cap\"\ndegree = 4\n\
         [[relations]]\nkind = \"polynomial\"\nname = \"p\"\nvalue = \"x*y + z\"\n",
    )
    .unwrap();
    let out = engel(&["--spec", path.to_str().unwrap(), "build"], &[]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("relation 1"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn build_prints_dimensions() {
    let out = engel(&["build"], &[]);
    let text = stdout(&out);
    assert!(text.contains("dimension: 26"), "{text}");
    assert!(text.contains("nilpotency degree: 8"), "{text}");
}

#[test]
fn reports_are_reproducible_across_thread_counts() {
    let one = engel(&["report"], &[("ENGEL_JOBS", "1")]);
    let four = engel(&["report"], &[("ENGEL_JOBS", "4")]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    let json: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    let claims = json["claims"].as_array().unwrap();
    assert!(claims.iter().all(|c| c.get("timing_ms").is_none()));
    assert!(claims.iter().all(|c| c["matches"] == true));
}

#[test]
fn timing_is_opt_in() {
    let out = engel(&["--timing", "report"], &[]);
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(json["claims"][0].get("timing_ms").is_some());
}

#[test]
fn char_scan_separates_small_primes() {
    let out = engel(&["--format", "json", "char-scan"], &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let json: serde_json::Value = serde_json::from_str(&text).unwrap();
    let claims = json["claims"].as_array().unwrap();
    let status = |id: &str| {
        let c = claims.iter().find(|c| c["id"] == id).unwrap_or_else(|| panic!("{id}: {text}"));
        (c["status"].as_str().unwrap().to_owned(), c.get("observed").cloned())
    };
    for p in ["f2", "f3"] {
        let (s, observed) = status(&format!("char-scan.{p}.group-engel-5"));
        assert_eq!(s, "exploratory");
        assert_eq!(observed.unwrap(), "pass");
    }
    for p in ["f5", "f7"] {
        assert_eq!(status(&format!("char-scan.{p}.group-engel-5")).0, "fail");
        assert_eq!(status(&format!("char-scan.{p}.lie-engel-5")).0, "pass");
    }
}

#[test]
fn witness_command_finds_generators() {
    let out = engel(&["witness", "--group-engel", "5"], &[]);
    let text = stdout(&out);
    assert!(text.contains("(x, y)"), "{text}");
}
