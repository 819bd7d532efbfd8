use std::path::Path;
use std::process::{Command, Output};

fn peterson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peterson"))
        .args(args)
        .env_remove("PETERSON_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/golden"))
}

#[test]
fn build_sl2_matches_golden() {
    let o = peterson(&["build", "--type", "A", "--rank", "1", "--parabolic", "", "--equivariant"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["qbar"][0], "x_1^2 + 2*x_1*h_1");
    assert_eq!(json["generators"][0], "x_1^2 + 2*x_1*h_1 - q_1");
    let stored = std::fs::read_to_string(golden_dir().join("A1_borel_equivariant.json")).unwrap();
    assert_eq!(stdout(&o), stored);
}

#[test]
fn build_a2_borel_shape() {
    let o = peterson(&["build", "--type", "A", "--rank", "2", "--parabolic", ""]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = json["variables"].as_array().unwrap().iter().filter(|v| v["role"] == "cell").count();
    assert_eq!(cells, 3);
    assert_eq!(json["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn build_other_schemes() {
    let o = peterson(&["build", "--type", "A", "--rank", "1", "--equivariant", "--scheme", "yp-star"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["inverted"][0], "x_1^2");
    let o = peterson(&["build", "--type", "A", "--rank", "1", "--equivariant", "--scheme", "centralizer"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn config_errors_exit_2() {
    for args in [
        &["build", "--type", "A", "--rank", "2", "--parabolic", "9"][..],
        &["build", "--type", "Q", "--rank", "2"],
        &["build", "--type", "G", "--rank", "3"],
        &["rank", "--type", "A", "--rank", "1", "--budget", "0"],
        &["verify", "--suite", "nonsense"],
        &["build", "--type", "A"],
    ] {
        assert_eq!(peterson(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_peterson"))
        .args(["rank", "--type", "B", "--rank", "2"])
        .env("PETERSON_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("pending"));
}

#[test]
fn verify_golden_passes() {
    let o = peterson(&["verify", "--suite", "golden-sl2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 failed"));
}

#[test]
fn verify_levi_qbar_single_case() {
    let o = peterson(&["verify", "--suite", "levi-qbar", "--type", "A", "--rank", "2", "--parabolic", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS\tlevi-qbar\tA2 excluded={1}"));
}

#[test]
fn corrupted_golden_fails() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(golden_dir()).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let target = dir.path().join("A1_borel_equivariant.json");
    let text = std::fs::read_to_string(&target).unwrap().replace("2*x_1*h_1", "3*x_1*h_1");
    std::fs::write(&target, text).unwrap();
    let o = peterson(&["verify", "--suite", "golden-sl2", "--golden-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let failures: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(failures.as_array().unwrap().len(), 1);
    assert_eq!(failures[0]["detail"], "A1_borel_equivariant.json differs from the rebuilt presentation");
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["build", "--type", "B", "--rank", "2", "--parabolic", "1", "--equivariant"][..],
        &["rank", "--type", "A", "--rank", "2", "--format", "json"],
        &["verify", "--suite", "rank,fiber", "--format", "json"],
    ] {
        let a = peterson(args);
        let b = peterson(args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn rank_report() {
    let o = peterson(&["rank", "--type", "A", "--rank", "2", "--parabolic", "1", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(json["rank"], 3);
    assert_eq!(json["specialized"], serde_json::json!([3, 3, 3]));
}

#[test]
fn pls_tsv() {
    let o = peterson(&["pls", "--type", "A", "--rank", "1", "--max-len", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "w\tlambda\tlength\tin_WP_af\teta\tw_tilde");
    assert_eq!(rows[1], "e\t[0]\t0\ttrue\t[0]\te");
    assert!(rows.iter().all(|r| r.split('\t').count() == 6));
    assert!(rows.contains(&"s1\t[-1]\t1\ttrue\t[-1]\ts1"));
    assert!(rows.contains(&"e\t[-1]\t2\ttrue\t[-1]\te"));
}
