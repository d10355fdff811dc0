use std::path::PathBuf;
use std::process::{Command, Output};

use nilweight::json;
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_nilweight"))
}

fn dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join(sub)
}

fn fixture(name: &str) -> String {
    dir("fixtures").join(name).to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_out(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--output", "json"]);
    serde_json::from_str(&stdout(&full)).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(dir("golden").join(name)).unwrap()
}

#[test]
fn demos_match_golden_files() {
    for demo in [
        "jordan",
        "strict",
        "curve-system",
        "bounding-pair",
        "sp-bigrading",
    ] {
        assert_eq!(
            stdout(&["demo", demo]),
            golden(&format!("{demo}.txt")),
            "{demo}"
        );
    }
    assert_eq!(
        stdout(&["demo", "bounding-pair", "--genus", "3"]),
        golden("bounding-pair-g3.txt")
    );
    assert_eq!(
        stdout(&["demo", "bounding-pair", "--output", "json"]),
        golden("bounding-pair.json")
    );
}

#[test]
fn bounding_pair_reports_witness() {
    for g in ["1", "2", "3"] {
        let text = stdout(&["demo", "bounding-pair", "--genus", g]);
        assert!(text.contains("CertifiedNonexistent, witness k=-1"));
        assert!(text.contains("witness checked: true"));
    }
    let out = run(&["demo", "bounding-pair", "--genus", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn zero_matrix_has_single_jump() {
    let v = json_out(&["wf", &fixture("zero3.json")]);
    let f = json::filtration_from_value(v["filtration"].clone()).unwrap();
    assert_eq!(f.jumps().len(), 1);
    assert_eq!(f.gr_dims(), [(0, 3)].into_iter().collect());
}

#[test]
fn mwf_shifts_jordan_block() {
    let v = json_out(&["mwf", &fixture("jordan3.json"), "--center", "2"]);
    let f = json::filtration_from_value(v["filtration"].clone()).unwrap();
    let jumps: Vec<i64> = f.jumps().keys().copied().collect();
    assert_eq!(jumps, vec![0, 2, 4]);
}

#[test]
fn dims_single_row() {
    let v = json_out(&["dims", "--g", "7", "--m", "1"]);
    assert_eq!(v["bound"], 7);
    assert_eq!(v["dim"], 35);
    let table = json_out(&["dims", "--g-max", "6", "--m-max", "4"]);
    let listed: Vec<(u32, u32)> = serde_json::from_value(table["insufficient"].clone()).unwrap();
    assert!(listed.contains(&(3, 4)) && listed.contains(&(6, 2)));
}

#[test]
fn rwf_bounding_pair_file() {
    let v = json_out(&[
        "rwf",
        &fixture("bounding_pair_g1.json"),
        &fixture("punctured_torus_w.json"),
    ]);
    assert_eq!(v["outcome"], "CertifiedNonexistent");
    assert_eq!(v["k"], -1);
    assert_eq!(v["witness"], serde_json::json!(["0", "1", "0"]));
}

#[test]
fn rwf_reads_decreasing_filtrations() {
    let v = json_out(&[
        "rwf",
        &fixture("jordan3.json"),
        &fixture("hodge_decreasing.json"),
        "--decreasing",
    ]);
    let candidate = json::filtration_from_value(v["candidate"].clone()).unwrap();
    let jumps: Vec<i64> = candidate.jumps().keys().copied().collect();
    assert_eq!(jumps, vec![-1, 0, 1]);
    let out = run(&[
        "rwf",
        &fixture("jordan3.json"),
        &fixture("hodge_decreasing.json"),
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn pl_curve_file() {
    let v = json_out(&["pl", &fixture("curves_g2.json")]);
    assert_eq!(v["verified"], true);
    let m = json::filtration_from_value(v["relative"].clone()).unwrap();
    assert_eq!(m.gr_dims(), [(-2, 3), (0, 2)].into_iter().collect());
    let out = run(&["pl", &fixture("curves_crossing.json")]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let out = run(&["wf", &fixture("not_nilpotent.json")]);
    assert_eq!(out.status.code(), Some(1));

    let out = run(&["wf", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");

    let out = run(&["wf", &fixture("does_not_exist.json")]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["dims"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pants_workflow() {
    let tmp = std::env::temp_dir().join(format!("nilweight-cli-{}", std::process::id()));
    std::fs::create_dir_all(&tmp).unwrap();
    let save = |name: &str| {
        let path = tmp.join(format!("{name}.json"));
        std::fs::write(
            &path,
            stdout(&["pants", "catalog", name, "--output", "json"]),
        )
        .unwrap();
        path.to_string_lossy().into_owned()
    };
    let dumbbell = save("dumbbell-a");
    let theta = save("theta-a");
    let theta_b = save("theta-b");

    assert_eq!(json_out(&["pants", "validate", &dumbbell])["betti"], 2);
    assert_eq!(
        json_out(&["pants", "reach", &dumbbell, &theta]),
        serde_json::json!({"reachable": true, "moves": 1})
    );
    assert_eq!(
        json_out(&["pants", "reach", &theta, &theta_b])["reachable"],
        false
    );
    assert_eq!(
        json_out(&["pants", "invariant", &dumbbell]),
        json_out(&["pants", "invariant", &theta])
    );
    assert_ne!(
        json_out(&["pants", "invariant", &theta]),
        json_out(&["pants", "invariant", &theta_b])
    );

    let moved = json_out(&["pants", "move", &dumbbell, "--white", "s"]);
    let pg = json::pants_graph_from_json(&moved.to_string()).unwrap();
    assert!(pg.is_valid());

    let out = run(&["pants", "move", &dumbbell, "--white", "l", "--class", "1,0"]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&tmp).ok();
}

/// Every JSON document the tool emits parses back to the same value.
#[test]
fn emitted_json_round_trips() {
    let f = |v: &Value| json::filtration_to_value(&json::filtration_from_value(v.clone()).unwrap());

    let v = json_out(&["wf", &fixture("jordan3.json")]);
    assert_eq!(f(&v["filtration"]), v["filtration"]);

    let v = json_out(&["pl", &fixture("curves_g2.json")]);
    for key in ["monodromy", "relative"] {
        assert_eq!(f(&v[key]), v[key]);
    }
    let op = json::matrix_from_value(v["operator"].clone()).unwrap();
    assert_eq!(json::matrix_to_value(&op), v["operator"]);

    let v = json_out(&["demo", "curve-system"]);
    let (s, cs) = json::curve_system_from_json(&v["curves"].to_string()).unwrap();
    assert_eq!(json::curve_system_to_value(&s, &cs), v["curves"]);

    let v = json_out(&["demo", "bounding-pair"]);
    assert_eq!(f(&v["result"]["candidate"]), v["result"]["candidate"]);

    let v = json_out(&["pants", "catalog", "tetrahedron-mixed"]);
    let pg = json::pants_graph_from_json(&v.to_string()).unwrap();
    assert_eq!(json::pants_graph_to_value(&pg), v);
}
