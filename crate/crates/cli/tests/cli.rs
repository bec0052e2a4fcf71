use std::process::{Command, Output};

fn dig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dig")).args(args).env_remove("DIG_GB_BUDGET").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn distance_matrix_of_c5() {
    let o = dig(&["dist", "--named", "C5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("0 1 2 2 1"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn snf_json_with_evaluation() {
    let o = dig(&["snf", "--named", "C5", "--evaluate", "2,1,2,1,2", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    // deltas start at the empty minor
    let deltas = v["deltas"].as_array().unwrap();
    assert_eq!(deltas.len(), 6);
    assert_eq!(deltas[0], 1);
    let product: i64 = v["invariant_factors"].as_array().unwrap().iter().map(|d| d.as_i64().unwrap()).product();
    assert_eq!(deltas[5].as_i64(), Some(product));
}

#[test]
fn univariate_ideal_of_c5() {
    let o = dig(&["ideal", "--named", "C5", "--k", "3", "--ring", "Z", "--univariate", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["trivial"], false);
    let basis: Vec<&str> = v["basis"].as_array().unwrap().iter().map(|p| p.as_str().unwrap()).collect();
    assert_eq!(basis, ["11", "t - 5"]);
}

#[test]
fn classify_csv_rows() {
    let o = dig(&["classify", "--named", "C5", "--csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("graph6,n,lambda1_Z"));
    assert_eq!(lines.next(), Some("Dhc,5,0,0,1,0,1,0"));
}

#[test]
fn classify_generated_batch_is_one_row_per_graph() {
    let o = dig(&["classify", "--gen", "4", "--csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 1 + 6);
}

#[test]
fn verify_exit_codes() {
    let ok = dig(&["verify", "knm"]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(stdout(&ok).contains("0 failed"));

    let unknown = dig(&["verify", "no-such-suite"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn verify_reports_failures_with_replay() {
    // K4 has a nontrivial third univariate ideal over Z, so the direct check disagrees.
    let g6 = std::env::temp_dir().join(format!("dig-k4-{}.g6", std::process::id()));
    std::fs::write(&g6, "C~\n").unwrap();
    let o = dig(&["verify", "lambda2tZ-direct", "--graph6", g6.to_str().unwrap(), "--json"]);
    std::fs::remove_file(&g6).ok();
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failed"], 1);
    assert!(v["failures"][0]["replay"].as_str().unwrap().starts_with("dig "));
}

#[test]
fn parse_errors_exit_with_two() {
    let o = dig(&["dist", "--g6", "D?"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("offset 2"));
}

#[test]
fn suites_are_listed() {
    let o = dig(&["suites"]);
    assert!(o.status.success());
    let text = stdout(&o);
    for name in ["tree-snf", "appendix-code8", "lambda2Z-equivalence", "phi-bounds"] {
        assert!(text.contains(name), "{name}");
    }
}
