use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

use infgon::triangulation::all_windows;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn infgon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_infgon")).args(args).env("INFGON_NO_COLOR", "1").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = infgon(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn running() -> String {
    data("running.json").display().to_string()
}

#[test]
fn sequence_of_running_example() {
    assert_eq!(stdout(&["sequence", "--window", &running()]), "{\"x\":\"0100011\",\"y\":[1,3,7,8]}\n");
}

#[test]
fn mutate_replaces_the_arc() {
    let v: Value = serde_json::from_str(&stdout(&["mutate", "--window", &running(), "--arc", "0,3"])).unwrap();
    assert_eq!(v["format"], "infgon/1");
    let arcs = v["arcs"].as_array().unwrap();
    assert!(arcs.contains(&serde_json::json!([1, 7])));
    assert!(!arcs.contains(&serde_json::json!([0, 3])));
}

#[test]
fn pretty_frieze_grid() {
    let expected = "  | 0 1 2 3 4 5 6 7 8
---------------------
0 | 0 1 2 1 3 2 3 1 1
1 |   0 1 1 4 3 5 2 3
2 |     0 1 5 4 7 3 5
3 |       0 1 1 2 1 2
4 |         0 1 3 2 5
5 |           0 1 1 3
6 |             0 1 4
7 |               0 1
";
    assert_eq!(stdout(&["frieze", "--window", &running(), "--pretty"]), expected);
    assert_eq!(stdout(&["frieze", "--from-window", &running(), "--pretty"]), expected);
}

#[test]
fn color_marks_the_ones() {
    let out = Command::new(env!("CARGO_BIN_EXE_infgon"))
        .args(["frieze", "--window", &running(), "--pretty"])
        .env_remove("INFGON_NO_COLOR")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("\x1b[1;32m1\x1b[0m"));
}

#[test]
fn documents_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.json");
    let second = dir.path().join("b.json");
    let p = |x: &Path| x.display().to_string();

    stdout(&["mutate", "--window", &running(), "--arc", "3,5", "--out", &p(&first)]);
    stdout(&["validate", "--window", &p(&first), "--out", &p(&second)]);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());

    stdout(&["frieze", "--window", &running(), "--out", &p(&first)]);
    stdout(&["frieze", "--input", &p(&first), "--out", &p(&second)]);
    assert_eq!(std::fs::read(&first).unwrap(), std::fs::read(&second).unwrap());
}

#[test]
fn quiddity_friezes() {
    let v: Value = serde_json::from_str(&stdout(&["frieze", "--quiddity", "1,2,1,2", "--kind", "cc"])).unwrap();
    assert_eq!(v["kind"]["type"], "FiniteCC");
    let grid = stdout(&["frieze", "--quiddity", "2,2,2", "--kind", "fountain", "--left-quiddity", "2,2,2", "--pretty"]);
    assert!(grid.contains('·'));
}

#[test]
fn error_codes() {
    let out = infgon(&["mutate", "--window", &running(), "--arc", "0,8"]);
    assert_eq!(out.status.code(), Some(1));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["code"], "NotMutableHere");
    assert_eq!(err["context"], serde_json::json!([0, 8]));
    assert!(err["message"].is_string());

    assert_eq!(infgon(&["mutate", "--window", &running(), "--arc", "5"]).status.code(), Some(2));
    assert_eq!(infgon(&["nonsense"]).status.code(), Some(2));
    assert_eq!(infgon(&["validate", "--window", "/no/such/file.json"]).status.code(), Some(1));
}

#[test]
fn render_counts() {
    let svg = stdout(&["render", "--window", &running()]);
    assert_eq!(svg.matches(r#"class="arc""#).count(), 15);
    assert_eq!(svg.matches(r#"class="label""#).count(), 9);
    assert!(svg.contains(r#"class="infinite-arc""#));
    assert_eq!(svg, stdout(&["render", "--window", &running()]));

    let dir = tempfile::tempdir().unwrap();
    let tiny = dir.path().join("tiny.json");
    std::fs::write(&tiny, r#"{"format":"infgon/1","lo":0,"hi":1,"fountain":null,"arcs":[]}"#).unwrap();
    let svg = stdout(&["render", "--window", &tiny.display().to_string()]);
    assert_eq!(svg.matches(r#"class="arc""#).count(), 1);
    assert!(!svg.contains("infinite-arc"));

    let tikz = stdout(&["render", "--window", &running(), "--format", "tikz", "--target", "frieze"]);
    assert!(tikz.starts_with("\\begin{array}"));
}

#[test]
fn chi_and_module() {
    let v: Value = serde_json::from_str(&stdout(&["chi", "--window", &running(), "--arc", "1,5"])).unwrap();
    assert_eq!(v["count"], "3");
    assert_eq!(v["crossing"]["crossed"], serde_json::json!([[0, 3], [3, 7]]));
    let v: Value = serde_json::from_str(&stdout(&["module", "--arc", "0,3", "--with", "1,5"])).unwrap();
    assert_eq!(v["display"], "(x,y^2)(-2)");
    assert_eq!(v["ext"], 1);
    assert_eq!(stdout(&["penrose", "--encode", "101"]), "{\"word\":\"10010\"}\n");
    assert_eq!(stdout(&["penrose", "--decode", "10010"]), "{\"word\":\"101\"}\n");
}

#[test]
fn frieze_and_specialized_cluster_frieze_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.display().to_string();
    for w in all_windows(-2, 3, Some(0)).into_iter().chain(all_windows(0, 5, None)) {
        std::fs::write(&path, serde_json::to_string(&w).unwrap()).unwrap();
        assert_eq!(
            stdout(&["frieze", "--window", &p]),
            stdout(&["cluster-frieze", "--window", &p, "--specialize-ones"]),
            "{w:?}"
        );
    }
}
