use std::process::{Command, Output};

const KRONECKER: &str =
    r#"{"vertices":[1,2],"arrows":[{"id":"a","from":1,"to":2},{"id":"b","from":1,"to":2}]}"#;
const A2: &str = r#"{"vertices":[1,2],"arrows":[{"id":"a","from":1,"to":2}]}"#;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quivergrass"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn classify_kronecker() {
    let o = run(&["classify", KRONECKER]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "Affine Ã1, delta=(1,1)");
    let o = run(&["classify", A2, "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["class"], "dynkin");
    assert_eq!(v["type"], "A2");
}

#[test]
fn catalog_of_a2_has_three_entries() {
    let o = run(&["--quiver", A2, "--format", "json", "catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let entries = v.as_array().unwrap();
    assert_eq!(entries.len(), 3);
    assert!(entries
        .iter()
        .all(|e| e["rigid"] == true && e["defect"].is_null()));
}

#[test]
fn affine_catalog_needs_a_bound() {
    assert_eq!(
        run(&["--quiver", KRONECKER, "catalog"]).status.code(),
        Some(2)
    );
    let o = run(&[
        "--quiver", KRONECKER, "--bound", "1", "--format", "json", "catalog",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 8);
}

#[test]
fn count_projective_of_kronecker() {
    let o = run(&[
        "--quiver",
        KRONECKER,
        "count",
        "preproj:k=0,i=1",
        "--e",
        "0,1",
        "--mode",
        "both",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "q + 1; verified at 2,3,5");
    let o = run(&[
        "--quiver",
        KRONECKER,
        "count",
        "preproj:k=0,i=1",
        "--e",
        r#"{"2":1}"#,
        "--mode",
        "brute",
    ]);
    assert_eq!(stdout(&o), "q=2: 3, q=3: 4, q=5: 6");
}

#[test]
fn budget_exhaustion_exits_with_3() {
    let o = run(&[
        "--quiver",
        KRONECKER,
        "--budget",
        "10",
        "count",
        "preproj:k=1,i=1",
        "--e",
        "1,2",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn cluster_pairs() {
    let o = run(&[
        "--quiver",
        KRONECKER,
        "cluster",
        "preproj:k=0,i=1",
        "preproj:k=1,i=2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "multiplication formula VERIFIED");
    let o = run(&[
        "--quiver",
        KRONECKER,
        "cluster",
        "preproj:k=0,i=2",
        "preinj:k=0,i=1",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hom_ext_and_tau() {
    let hom = run(&[
        "--quiver",
        KRONECKER,
        "hom",
        "preproj:k=0,i=2",
        "preproj:k=0,i=1",
    ]);
    assert_eq!(stdout(&hom), "2");
    let ext = run(&[
        "--quiver",
        KRONECKER,
        "--field",
        "q",
        "ext",
        "preinj:k=0,i=1",
        "preproj:k=0,i=2",
    ]);
    assert_eq!(stdout(&ext), "2");
    let tau = run(&[
        "--quiver",
        KRONECKER,
        "--format",
        "json",
        "tau",
        "preinj:k=0,i=2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&tau)).unwrap();
    assert_eq!(v["dims"], serde_json::json!({"1": 4, "2": 3}));
    let back = run(&["--quiver", KRONECKER, "tau", "--inverse", &stdout(&tau)]);
    assert!(stdout(&back).starts_with("dims=(2,1)"));
}

#[test]
fn output_is_deterministic() {
    let args = [
        "--quiver",
        KRONECKER,
        "--format",
        "json",
        "count",
        "preproj:k=1,i=2",
        "--e",
        "1,2",
    ];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn io_and_parse_errors_exit_with_4() {
    assert_eq!(
        run(&["count", "/nonexistent/module.json", "--e", "1"])
            .status
            .code(),
        Some(4)
    );
    assert_eq!(
        run(&["--quiver", A2, "count", "preproj:k=0,i=1", "--e", "1,x"])
            .status
            .code(),
        Some(4)
    );
}

#[test]
fn coordinates_need_a_quiver() {
    assert_eq!(run(&["cc", "preproj:k=0,i=1"]).status.code(), Some(2));
}
