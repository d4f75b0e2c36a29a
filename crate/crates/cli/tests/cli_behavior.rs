//! End-to-end checks of the binary: exit codes, report files, JSON
//! round-tripping, and the spectrum override hook.

use std::path::Path;
use std::process::{Command, Output};

fn knotgens(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotgens"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn verify_all_passes() {
    let out = knotgens(&["verify", "all"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 6);
    for name in ["figure8", "whitehead", "link622", "link623", "trefoil", "remark"] {
        assert!(text.contains(name), "missing {name} in summary");
    }
}

#[test]
fn unknown_scenario_is_usage_error() {
    let out = knotgens(&["verify", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn triangle_parameter_validation() {
    assert_eq!(knotgens(&["verify", "triangle:4"]).status.code(), Some(2));
    assert_eq!(knotgens(&["verify", "triangle:3"]).status.code(), Some(2));
    assert!(knotgens(&["verify", "triangle:5"]).status.success());
}

#[test]
fn table_rejects_scenarios_without_tables() {
    assert_eq!(knotgens(&["table", "triangle:5"]).status.code(), Some(2));
    assert_eq!(knotgens(&["table", "remark"]).status.code(), Some(2));
}

#[test]
fn whitehead_table_json_has_30_records() {
    let out = knotgens(&["table", "whitehead", "--format", "json"]);
    assert!(out.status.success());
    let cells: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let cells = cells.as_array().unwrap();
    assert_eq!(cells.len(), 30);
    for cell in cells {
        assert!(cell.get("y").is_some());
        assert!(cell.get("z").is_some());
        assert!(cell.get("x2").is_some());
        assert_eq!(cell.get("divisible"), Some(&serde_json::Value::Bool(true)));
    }
}

#[test]
fn markdown_table_cells_match_json_records() {
    let md = stdout(&knotgens(&["table", "figure8", "--format", "md"]));
    let json = stdout(&knotgens(&["table", "figure8", "--format", "json"]));
    let cells: serde_json::Value = serde_json::from_str(&json).unwrap();
    let mut json_values: Vec<String> = cells
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["x2"].as_str().unwrap().to_string())
        .collect();
    let mut md_values: Vec<String> = md
        .lines()
        .skip(2)
        .flat_map(|line| {
            line.split('|')
                .map(str::trim)
                .skip(2)
                .filter(|f| !f.is_empty())
                .map(str::to_string)
                .collect::<Vec<_>>()
        })
        .collect();
    json_values.sort();
    md_values.sort();
    assert_eq!(json_values, md_values);
}

#[test]
fn ring_utility_outputs() {
    let out = stdout(&knotgens(&["units", "gaussian"]));
    assert_eq!(out.lines().count(), 4);

    let out = stdout(&knotgens(&["divisors", "eisenstein", "3", "0"]));
    assert_eq!(out.lines().count(), 18);

    let out = stdout(&knotgens(&["sqrt", "eisenstein", "0", "3"]));
    let roots: Vec<&str> = out.lines().collect();
    assert_eq!(roots, vec!["-1-1*w", "1+1*w"]);

    let out = stdout(&knotgens(&["length", "eisenstein", "1", "1"]));
    assert_eq!(out.trim(), "1.087070145");
}

#[test]
fn ring_utility_usage_errors() {
    assert_eq!(knotgens(&["units", "quaternions"]).status.code(), Some(2));
    // the integers ring has no tau coefficient
    assert_eq!(knotgens(&["divisors", "integers", "3", "1"]).status.code(), Some(2));
    // zero has no divisor enumeration
    assert_eq!(knotgens(&["divisors", "gaussian", "0", "0"]).status.code(), Some(2));
    // elliptic trace has no axis
    assert_eq!(knotgens(&["length", "integers", "1", "0"]).status.code(), Some(2));
}

#[test]
fn word_evaluation() {
    let out = knotgens(&["word", "figure8", "b^-1 a^-1 b^3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("[[1-3*w, -1+0*w], [-3+5*w, 1+1*w]]"));
    assert!(text.contains("trace: 2-2*w"));
    assert_eq!(knotgens(&["word", "figure8", "3x"]).status.code(), Some(2));
}

#[test]
fn json_report_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = knotgens(&["verify", "all", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let reserialized = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(text, reserialized);
    // schema spot checks
    assert_eq!(value["artifact-version"], env!("CARGO_PKG_VERSION"));
    let scenarios = value["scenarios"].as_array().unwrap();
    assert_eq!(scenarios.len(), 6);
    for s in scenarios {
        assert!(s["name"].is_string());
        for check in s["checks"].as_array().unwrap() {
            assert_eq!(check["status"], "pass");
            assert!(check["id"].is_string() && check["detail"].is_string());
        }
        assert!(s["report"].is_object());
    }
    // no stray temp file once the write lands
    assert!(!Path::new(&format!("{}.tmp", path.display())).exists());
}

#[test]
fn markdown_report_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.md");
    let out = knotgens(&["verify", "link622", "--markdown", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("## link622"));
    assert!(text.contains("conclusion: parabolic-only"));
    assert!(text.contains("eliminated"));
}

#[test]
fn spectrum_override_changes_the_verdict() {
    // a spectrum that contains the candidate length means the geodesic
    // step can no longer rule the survivors out
    let dir = tempfile::tempdir().unwrap();
    let spectrum = dir.path().join("spectrum.txt");
    std::fs::write(&spectrum, "link622 0.86255462766206 1.087070145 1.66288589105862\n")
        .unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_knotgens"))
        .args(["verify", "link622"])
        .env("KNOTGENS_SPECTRUM", &spectrum)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "expected failing checks:\n{text}");

    // an unreadable override path is a usage error
    let out = Command::new(env!("CARGO_BIN_EXE_knotgens"))
        .args(["verify", "link622"])
        .env("KNOTGENS_SPECTRUM", dir.path().join("missing.txt"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_single_scenario_writes_survivors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let out = knotgens(&["verify", "link622", "--json", path.to_str().unwrap()]);
    assert!(out.status.success());
    let value: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let report = &value["scenarios"][0]["report"];
    assert_eq!(report["conclusion"], "parabolic-only");
    let survivors = report["square-survivors"].as_array().unwrap();
    assert_eq!(survivors.len(), 3);
    let eliminations = report["geodesic-eliminations"].as_array().unwrap();
    assert_eq!(eliminations.len(), 4);
    for e in eliminations {
        assert_eq!(e["eliminated"], true);
    }
}
