use std::process::{Command, Output};

fn vincyc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vincyc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn theta_round_trip() {
    let o = vincyc(&["theta", "2341"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4123");
    let o = vincyc(&["theta-inv", "15,13,11,9,8,7,5,3,1,6,4,2,14,12,10"]);
    assert_eq!(stdout(&o).trim(), "6,14,1,2,3,4,5,7,8,15,9,10,11,12,13");
}

#[test]
fn check_methods_and_explain() {
    let o = vincyc(&["check", "2413"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().filter(|l| l.ends_with("true")).count(),
        5
    );
    let o = vincyc(&["check", "321", "--method", "depth"]);
    assert_eq!(stdout(&o).trim(), "not a member");
    let o = vincyc(&["check", "321", "--explain"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["direct"], false);
    assert_eq!(v["cycles"], 2);
}

#[test]
fn match_and_count() {
    let o = vincyc(&["match", "[32][41]", "3241"]);
    assert_eq!(stdout(&o).trim(), "positions 1,2,3,4 values 3,2,4,1");
    let o = vincyc(&["match", "[23]1{1->4}", "2413"]);
    assert_eq!(stdout(&o).trim(), "no occurrence");
    let o = vincyc(&["match", "21", "4321", "--count"]);
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn enumerate_and_count() {
    let o = vincyc(&["enumerate", "c321", "4", "--emit", "theta"]);
    assert_eq!(stdout(&o), "4123\n4312\n4213\n4321\n");
    let o = vincyc(&["enumerate", "A", "3"]);
    assert_eq!(stdout(&o), "123\n213\n312\n321\n");
    let o = vincyc(&["count", "c321", "--max-n", "8", "--threads", "3"]);
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert_eq!(last, "8 178");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(vincyc(&["theta", "1223"]).status.code(), Some(2));
    assert_eq!(vincyc(&["theta", "12a"]).status.code(), Some(2));
    assert_eq!(vincyc(&["match", "[3", "123"]).status.code(), Some(2));
    assert_eq!(
        vincyc(&["verify", "no-such-suite", "--max-n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(vincyc(&["count", "c321"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(
        vincyc(&["verify", "theorem-equivalence", "--max-n", "6"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        vincyc(&["verify", "ratio-bounds", "--max-n", "6"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn cache_merge_and_conflict() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache.json");
    let cache_s = cache.to_str().unwrap();
    assert!(
        vincyc(&["count", "c321", "--max-n", "6", "--cache", cache_s])
            .status
            .success()
    );
    assert!(
        vincyc(&["count", "c321", "--max-n", "7", "--cache", cache_s])
            .status
            .success()
    );
    let text = std::fs::read_to_string(&cache).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["c"]["7"], "66");
    std::fs::write(&cache, text.replace("\"66\"", "\"67\"")).unwrap();
    let o = vincyc(&["count", "c321", "--max-n", "7", "--cache", cache_s]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("conflict"));
}

#[test]
fn export_formats() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = vincyc(&[
        "export",
        "--seq",
        "s",
        "--format",
        "csv",
        "--out",
        out.to_str().unwrap(),
        "--max-n",
        "6",
    ]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], "n,value,provenance");
    assert_eq!(lines[1], "2,2,enumerated");
    assert_eq!(lines[6], "7,6,paper-table");
    assert_eq!(lines.len(), 23);

    let out = dir.path().join("c.b");
    vincyc(&[
        "export",
        "--seq",
        "c",
        "--format",
        "bfile",
        "--out",
        out.to_str().unwrap(),
        "--max-n",
        "5",
    ]);
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        "1 1\n2 1\n3 2\n4 4\n5 10\n6 24\n"
    );
}

#[test]
fn growth_commands() {
    let o = vincyc(&["growth", "lower-bound"]);
    assert!(stdout(&o).starts_with("3.14101"));
    let o = vincyc(&["growth", "upper-identity", "--max-n", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("n=5 lhs=6 rhs=6 equal=true"));
    let o = vincyc(&["growth", "report", "--cache", "/nonexistent/cache.json"]);
    assert_eq!(o.status.code(), Some(1));
    let o = vincyc(&["growth", "report", "--max-n", "7", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["lower_bound"].as_f64().unwrap() - 3.14101).abs() < 1e-5);
}
