//! End-to-end checks of the command-line surface, driving the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn ptf(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptf"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

#[test]
fn construct_then_verify_ball() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &[
            "construct",
            "--omb",
            "12",
            "--domain",
            "ball",
            "--k",
            "3",
            "--out",
            "p.json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(dir.path().join("p.json").exists());

    let out = ptf(&["verify", "--omb", "12", "--ptf", "p.json"], dir.path());
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("pass: 299 points"));
}

#[test]
fn construct_cube_from_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let list = serde_json::json!({
        "n": 6,
        "items": [
            {"var": 3, "negated": false, "output": 1},
            {"var": 1, "negated": true, "output": -1},
            {"var": 5, "negated": false, "output": 1}
        ],
        "default": -1
    });
    std::fs::write(dir.path().join("L.json"), list.to_string()).unwrap();

    let out = ptf(
        &[
            "construct",
            "--list",
            "L.json",
            "--h",
            "2",
            "--out",
            "p.json",
            "--report",
            "rows.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    let out = ptf(
        &["verify", "--list", "L.json", "--ptf", "p.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    let rows = std::fs::read_to_string(dir.path().join("rows.csv")).unwrap();
    assert!(rows.starts_with("n,param,blocks,"));
    assert_eq!(rows.lines().count(), 2);
}

#[test]
fn ball_without_radius_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &[
            "construct",
            "--omb",
            "8",
            "--domain",
            "ball",
            "--out",
            "p.json",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--k"));
}

#[test]
fn corrupted_coefficient_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &["construct", "--omb", "8", "--h", "4", "--out", "p.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    // flip one coefficient digit
    let path = dir.path().join("p.json");
    let mut record: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let num = record["poly"]["terms"][0]["num"]
        .as_str()
        .unwrap()
        .to_string();
    let tampered = if let Some(rest) = num.strip_prefix('-') {
        rest.to_string()
    } else {
        format!("-{num}")
    };
    record["poly"]["terms"][0]["num"] = serde_json::Value::String(tampered);
    std::fs::write(&path, record.to_string()).unwrap();

    let out = ptf(&["verify", "--omb", "8", "--ptf", "p.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("FAIL at point"));
}

#[test]
fn verify_over_cap_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &["construct", "--omb", "8", "--h", "4", "--out", "p.json"],
        dir.path(),
    );
    assert!(out.status.success());
    let out = ptf(
        &["verify", "--omb", "8", "--ptf", "p.json", "--cap", "100"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("cap"));
}

#[test]
fn adversary_writes_and_rechecks_chain() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &[
            "construct",
            "--omb",
            "12",
            "--domain",
            "ball",
            "--k",
            "4",
            "--out",
            "p.json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));

    let out = ptf(
        &[
            "adversary",
            "--omb",
            "12",
            "--ptf",
            "p.json",
            "--t",
            "4",
            "--k",
            "4",
            "--out",
            "chain.json",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("certified weight >="));

    let out = ptf(
        &["adversary", "--ptf", "p.json", "--recheck", "chain.json"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    assert!(stdout(&out).contains("certificate ok"));
}

#[test]
fn learn_emits_log_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &[
            "learn", "--omb", "6", "--d", "2", "--alpha", "6/5", "--out", "log.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("log.csv")).unwrap();
    assert!(csv.starts_with("example,label,prediction,mistake,cumulative"));
    assert!(csv.contains("n,d,log2_weight,mistakes,passes,converged,fitted_c"));
}

#[test]
fn bench_emits_one_row_per_parameter() {
    let dir = tempfile::tempdir().unwrap();
    let out = ptf(
        &[
            "bench",
            "--omb",
            "12",
            "--h",
            "2,4",
            "--k",
            "3",
            "--out",
            "bench.csv",
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{}", stderr(&out));
    let csv = std::fs::read_to_string(dir.path().join("bench.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4); // header + 3 rows
    assert!(csv.lines().nth(1).unwrap().starts_with("12,cube,2,"));
    assert!(csv.lines().last().unwrap().starts_with("12,ball,3,"));
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["a.json", "b.json"] {
        let out = ptf(
            &[
                "construct",
                "--random",
                "10,6",
                "--seed",
                "7",
                "--h",
                "3",
                "--out",
                name,
            ],
            dir.path(),
        );
        assert!(out.status.success(), "{}", stderr(&out));
    }
    let a = std::fs::read(dir.path().join("a.json")).unwrap();
    let b = std::fs::read(dir.path().join("b.json")).unwrap();
    assert_eq!(a, b);
}
