use std::process::{Command, Output};

fn qmoments(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qmoments")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn carlitz_catalan_three() {
    let o = qmoments(&["catalan", "--variant", "carlitz", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "1+2q+q^2+q^3");
}

#[test]
fn u_two() {
    let o = qmoments(&["family", "--name", "u", "--n", "2"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "x^2 - q/((1+q)(1+q^2))");
}

#[test]
fn routes_print_the_same_polynomial() {
    for route in ["closed", "recur"] {
        let o = qmoments(&["family", "--name", "fz", "--n", "4", "--z", "1/2", "--route", route]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), stdout(&qmoments(&["family", "--name", "fz", "--n", "4", "--z", "1/2"])));
    }
}

#[test]
fn moments_json_lists_every_route() {
    let o = qmoments(&["--format", "json", "moments", "--family", "f", "--n", "5"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["agree"], true);
    for r in ["triangle", "expand", "series"] {
        assert_eq!(v["routes"][r], serde_json::json!(["1", "1", "2", "5", "14", "42"]));
    }
}

#[test]
fn catalan_csv() {
    let o = qmoments(&["catalan", "--variant", "fuss", "--m", "3", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,value\n0,1\n1,1\n2,3\n3,12\n4,55\n");
}

#[test]
fn series_json() {
    let o = qmoments(&["series", "--name", "e", "--order", "1", "--format", "json"]);
    let v: Vec<String> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v, ["1", "1/(1-q)"]);
}

#[test]
fn verify_witness_text() {
    let o = qmoments(&["verify", "--suite", "eq-3.1-witness", "--order", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("-q^3+q^4"));
}

#[test]
fn verify_json_schema() {
    let o = qmoments(&["verify", "--suite", "eq-4.21,eq-1.4", "--order", "4", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "eq-4.21,eq-1.4");
    assert_eq!(v["mode"], "symbolic");
    assert!(v.get("elapsed_ms").is_none());
    let ids: Vec<_> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["eq-4.21", "eq-1.4"]);
    for c in v["checks"].as_array().unwrap() {
        for key in ["kind", "bound", "status"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
    let t = qmoments(&["verify", "--suite", "eq-1.4", "--order", "4", "--format", "json", "--timings"]);
    let v: serde_json::Value = serde_json::from_slice(&t.stdout).unwrap();
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_csv_has_a_row_per_check() {
    let o = qmoments(&["verify", "--suite", "s2", "--order", "4", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let n = qmoments(&["verify", "--list"]);
    let s2 = stdout(&n).lines().filter(|l| l.starts_with("eq-2.")).count();
    assert_eq!(out.lines().count(), s2 + 1);
}

#[test]
fn malformed_flags_exit_two() {
    for args in [
        &["family", "--n", "2"][..],
        &["family", "--name", "u", "--n", "two"],
        &["catalan", "--variant", "nope", "--n", "2"],
        &["verify", "--mode", "fuzzy"],
        &["--format", "yaml", "catalan", "--variant", "classical", "--n", "2"],
        &["family", "--name", "nope", "--n", "2"],
        &["family", "--name", "u", "--n", "2", "--z", "1/2"],
        &["verify", "--suite", "eq-9.99"],
    ] {
        let o = qmoments(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unknown_check_lists_known_ids() {
    let o = qmoments(&["verify", "--suite", "eq-9.99"]);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("eq-4.21") && err.contains("eq-3.1-witness"));
}
