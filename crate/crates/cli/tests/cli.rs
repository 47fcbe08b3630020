//! End-to-end tests against the built binary: exit codes, report shape,
//! byte-level determinism, and the file-format round trips.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_graphspectra"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, stdout, stderr) = run(args);
    let value: Value = serde_json::from_str(&stdout)
        .unwrap_or_else(|e| panic!("bad report ({}): {}\nstderr: {}", e, stdout, stderr));
    (code, value)
}

fn tmp(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("graphspectra-{}-{}", std::process::id(), name))
}

#[test]
fn spider_radius_reports_the_known_value() {
    let (code, report) = run_json(&["spider-radius", "--ell", "3"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["ell"], 3);
    assert!((details["radius"].as_f64().unwrap() - 2.074_313_293_051_956).abs() < 1e-9);
    assert!((details["limit"].as_f64().unwrap() - 2.121_320_343_559_642_4).abs() < 1e-12);
}

#[test]
fn family_reports_shape_and_emits_graph6() {
    let (code, report) = run_json(&["family", "tadpole:3,5", "--emit", "g6"]);
    assert_eq!(code, 0);
    assert_eq!(report["graph"]["n"], 8);
    let details = &report["results"][0]["details"];
    assert_eq!(details["m"], 8);
    assert_eq!(details["girth"], 3);
    assert_eq!(details["max_degree"], 3);
    assert_eq!(details["emitted"], "G{CGGC");
}

#[test]
fn graph6_input_matches_the_family_spectrum() {
    let path = tmp("tadpole.g6");
    std::fs::write(&path, "G{CGGC\n").unwrap();
    let (code, from_file) =
        run_json(&["spectrum", "--in", path.to_str().unwrap(), "--format", "g6"]);
    assert_eq!(code, 0);
    let (_, from_family) = run_json(&["spectrum", "--family", "tadpole:3,5"]);
    assert_eq!(
        from_file["results"][0]["details"]["values"],
        from_family["results"][0]["details"]["values"]
    );
    std::fs::remove_file(&path).ok();
}

#[test]
fn kappa_finds_the_triangle_for_two() {
    let (code, report) = run_json(&["kappa", "--lambda", "2.0"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["found"], true);
    assert_eq!(details["kappa"], 3);
    assert_eq!(details["certificate"]["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn kappa_reports_absence_without_failing() {
    let (code, report) = run_json(&["kappa", "--lambda", "1.8"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["found"], false);
    assert_eq!(details["searched_up_to"], 7);
}

#[test]
fn exhaustive_audit_covers_the_small_orders() {
    let (code, report) = run_json(&["audit", "--exhaustive-n", "4"]);
    assert_eq!(code, 0);
    let results = report["results"].as_array().unwrap();
    let counts: Vec<u64> = results
        .iter()
        .map(|r| r["details"]["graphs"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, vec![1, 1, 2, 6]);
    assert!(results.iter().all(|r| r["ok"] == true));
}

#[test]
fn audit_reads_an_edge_list_file() {
    let path = tmp("triangle.edges");
    std::fs::write(&path, "3 3\n0 1\n0 2\n1 2\n").unwrap();
    let (code, report) = run_json(&["audit", "--in", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(report["results"][0]["ok"], true);
    std::fs::remove_file(&path).ok();
}

#[test]
fn decompose_certifies_the_long_tadpole() {
    let (code, report) =
        run_json(&["decompose", "--family", "tadpole:3,12", "--lambda", "2.0"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["verdict"], "Case1");
    assert_eq!(details["effective_bound"], 11);
}

#[test]
fn decompose_rejects_a_high_second_eigenvalue() {
    let (code, report) =
        run_json(&["decompose", "--family", "barbell:3,3,12", "--lambda", "2.0"]);
    assert_eq!(code, 1);
    let result = &report["results"][0];
    assert_eq!(result["ok"], false);
    let error = result["details"]["error"].as_str().unwrap();
    assert!(error.contains("second eigenvalue"));
    // reproduction data rides along with the failure
    assert!(result["details"]["graph"].as_str().unwrap().starts_with("17 18\n"));
}

#[test]
fn bound_prints_the_closed_form() {
    let (code, report) = run_json(&["bound", "--lambda", "2.0", "--delta", "3"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["n_lambda"], 3);
    assert_eq!(details["bound"], "56862");
}

#[test]
fn lines_build_then_verify_round_trips() {
    let path = tmp("lines.csv");
    let (code, stdout, _) = run(&[
        "lines",
        "build",
        "--alpha",
        "0.3333333333333333",
        "--dim",
        "15",
        "--seed-family",
        "complete:2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 28);
    assert!(csv.lines().all(|l| l.split(',').count() == 15));

    let (code, report) = run_json(&[
        "lines",
        "verify",
        "--in",
        path.to_str().unwrap(),
        "--alpha",
        "0.3333333333333333",
    ]);
    assert_eq!(code, 0);
    let result = &report["results"][0];
    assert_eq!(result["ok"], true);
    assert_eq!(result["details"]["count"], 28);
    assert_eq!(result["details"]["dim"], 15);
    std::fs::remove_file(&path).ok();
}

#[test]
fn lines_verify_reads_json_with_its_own_alpha() {
    let path = tmp("lines.json");
    let h = 0.866_025_403_784_438_6;
    std::fs::write(
        &path,
        format!(
            r#"{{"alpha": 0.5, "dim": 2, "vectors": [[1.0, 0.0], [-0.5, {h}], [-0.5, -{h}]]}}"#
        ),
    )
    .unwrap();
    let (code, report) = run_json(&[
        "lines",
        "verify",
        "--in",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["results"][0]["ok"], true);
    assert_eq!(report["results"][0]["details"]["alpha"], 0.5);
    std::fs::remove_file(&path).ok();
}

#[test]
fn lines_verify_flags_the_wrong_angle() {
    let path = tmp("orth.csv");
    std::fs::write(&path, "1.0,0.0\n0.0,1.0\n").unwrap();
    let (code, report) = run_json(&[
        "lines",
        "verify",
        "--in",
        path.to_str().unwrap(),
        "--alpha",
        "0.5",
    ]);
    assert_eq!(code, 1);
    assert_eq!(report["results"][0]["ok"], false);
    std::fs::remove_file(&path).ok();
}

#[test]
fn lines_build_reports_a_mismatched_seed() {
    let (code, report) = run_json(&[
        "lines",
        "build",
        "--alpha",
        "0.2",
        "--dim",
        "9",
        "--seed-family",
        "path:3",
    ]);
    assert_eq!(code, 1);
    let result = &report["results"][0];
    assert_eq!(result["ok"], false);
    assert!(result["details"]["error"].as_str().unwrap().contains("spectral radius"));
}

#[test]
fn grid_check_counts_the_small_grid() {
    let (code, report) = run_json(&[
        "grid-check",
        "--p-max",
        "4",
        "--q-max",
        "4",
        "--l-max",
        "4",
        "--jobs",
        "2",
    ]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["total"], 56);
    assert_eq!(details["failures"].as_array().unwrap().len(), 0);
    assert_eq!(details["minima"].as_array().unwrap().len(), 3);
}

#[test]
fn monotonicity_passes_on_a_cycle() {
    let (code, report) = run_json(&["monotonicity", "--family", "cycle:6"]);
    assert_eq!(code, 0);
    assert_eq!(report["results"][0]["ok"], true);
    assert_eq!(report["results"][0]["details"]["entries"].as_array().unwrap().len(), 12);
}

#[test]
fn nodal_certifies_the_petersen_second_group() {
    let (code, report) = run_json(&["nodal", "--family", "petersen", "--k", "2"]);
    assert_eq!(code, 0);
    let details = &report["results"][0]["details"];
    assert_eq!(details["multiplicity"], 5);
    assert!(details["count_tree"].as_u64().unwrap() >= 5);
}

#[test]
fn reports_are_byte_identical_across_runs_and_workers() {
    let args = ["audit", "--family", "petersen", "--seed", "9"];
    let (code_a, first, _) = run(&args);
    let (code_b, second, _) = run(&args);
    assert_eq!(code_a, 0);
    assert_eq!(code_b, 0);
    assert_eq!(first, second);

    // a different worker count changes only the recorded config
    let (_, parallel, _) = run(&["audit", "--family", "petersen", "--seed", "9", "--jobs", "2"]);
    let a: Value = serde_json::from_str(&first).unwrap();
    let b: Value = serde_json::from_str(&parallel).unwrap();
    assert_eq!(a["results"], b["results"]);
}

#[test]
fn out_flag_writes_the_report_file() {
    let path = tmp("radius.json");
    let (code, stdout, _) =
        run(&["spider-radius", "--ell", "5", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["command"], "spider-radius");
    std::fs::remove_file(&path).ok();
}

#[test]
fn usage_errors_exit_two_with_empty_stdout() {
    for args in [
        &["family", "nonsense:3"][..],
        &["family", "tadpole:3"][..],
        &["spectrum"][..],
        &["spectrum", "--in", "/nonexistent/graph.edges"][..],
        &["n-lambda", "--lambda", "2.5"][..],
        &["kappa", "--lambda", "2.0", "--n-max", "12"][..],
        &["lines", "verify", "--in", "/nonexistent/lines.csv"][..],
        &["audit"][..],
        &["audit", "--family", "petersen", "--exhaustive-n", "3"][..],
    ] {
        let (code, stdout, stderr) = run(args);
        assert_eq!(code, 2, "args {:?} gave stderr {}", args, stderr);
        assert!(stdout.is_empty(), "args {:?} wrote to stdout", args);
        assert!(!stderr.is_empty(), "args {:?} silent on stderr", args);
    }
}
