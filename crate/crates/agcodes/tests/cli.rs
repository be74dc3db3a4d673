//! End-to-end tests of the `agcodes` binary: every subcommand, the JSON
//! artifact/report shapes, exit codes, and the error diagnostics that
//! scripts are expected to rely on.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_agcodes"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stderr_text(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// A per-test scratch file under the target-provided temp dir.
fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("agcodes-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn construct_then_analyze_round_trip() {
    let art = scratch("line_ext.json");
    let out = run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "0,1,2,3,4",
        "--variant",
        "extended",
        "--m",
        "2",
        "--out",
        art.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_text(&out));

    let artifact: Value = serde_json::from_str(&std::fs::read_to_string(&art).unwrap()).unwrap();
    assert_eq!(artifact["field"]["p"], 7);
    assert_eq!(artifact["field"]["e"], 1);
    assert_eq!(artifact["field"]["modulus"], serde_json::json!([0, 1]));
    assert_eq!(artifact["curve"]["family"], "line");
    assert_eq!(artifact["variant"], "extended");
    assert_eq!(artifact["m"], 2);
    assert_eq!(artifact["support"].as_array().unwrap().len(), 5);
    assert_eq!(artifact["generator"].as_array().unwrap().len(), 3);
    assert!(artifact.get("dual").is_none());

    let report = stdout_json(&run(&["analyze", art.to_str().unwrap()]));
    assert_eq!(report["n"], 6);
    assert_eq!(report["k"], 3);
    assert_eq!(report["d"], 4);
    assert_eq!(report["d_dual"], 4);
    assert_eq!(report["class"], "MDS");
    assert_eq!(report["defect"], 0);
    assert_eq!(report["defect_dual"], 0);
    assert!(report["rho"].is_null());
    assert!(report["rho_dual"].is_null());
    let bounds = report["bounds"].as_array().unwrap();
    assert!(!bounds.is_empty());
    for b in bounds {
        assert_eq!(b["pass"], true, "{}", b["name"]);
    }

    // Same artifact, same report: analysis is a pure function of the file.
    let again = stdout_json(&run(&["analyze", art.to_str().unwrap()]));
    assert_eq!(report, again);
}

#[test]
fn analyze_measures_covering_radii_on_request() {
    let art = scratch("line_rho.json");
    let out = run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "all-affine",
        "--variant",
        "extended",
        "--m",
        "2",
        "--out",
        art.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_text(&out));

    let report = stdout_json(&run(&[
        "analyze",
        art.to_str().unwrap(),
        "--rho",
        "--rho-dual",
    ]));
    // Genus 0: rho is pinned to the window [n0-m-1, n0-m].
    let rho = report["rho"].as_u64().unwrap();
    assert!((4..=5).contains(&rho), "rho = {rho}");
    let rho_dual = report["rho_dual"].as_u64().unwrap();
    assert!((2..=3).contains(&rho_dual), "dual rho = {rho_dual}");
    for b in report["bounds"].as_array().unwrap() {
        assert_eq!(b["pass"], true, "{}", b["name"]);
    }
}

#[test]
fn functional_dual_artifact_and_covering_radius_compose() {
    let art = scratch("paired_ext.json");
    let out = run(&[
        "construct",
        "--curve",
        "elliptic",
        "--p",
        "3",
        "--e",
        "2",
        "--a",
        "1",
        "--b",
        "0",
        "--support",
        "complete-fibers:3",
        "--variant",
        "extended",
        "--m",
        "4",
        "--out",
        art.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_text(&out));

    let dual_art = scratch("paired_ext_dual.json");
    let out = run(&[
        "dual",
        art.to_str().unwrap(),
        "--method",
        "functional",
        "--out",
        dual_art.to_str().unwrap(),
    ]);
    assert!(out.status.success(), "{}", stderr_text(&out));

    let dual: Value = serde_json::from_str(&std::fs::read_to_string(&dual_art).unwrap()).unwrap();
    assert_eq!(dual["dual"]["method"], "functional");
    assert_eq!(dual["dual"]["orthogonal"], true);
    // Extended elliptic codes have the single correction constant 2.
    assert_eq!(dual["dual"]["lambda"], serde_json::json!([2]));
    // [7, 4] primal: the dual generator has n - k = 3 rows of length 7.
    let rows = dual["generator"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].as_array().unwrap().len(), 7);

    // covering-radius on a dual artifact measures the dual code; it must
    // agree with what analyze --rho-dual reports on the primal.
    let cov = stdout_json(&run(&["covering-radius", dual_art.to_str().unwrap()]));
    let report = stdout_json(&run(&["analyze", art.to_str().unwrap(), "--rho-dual"]));
    assert_eq!(cov["rho"], report["rho_dual"]);
    assert_eq!(cov["total_syndromes"].as_u64().unwrap(), 9u64.pow(4));
    let newly: Vec<u64> = cov["newly_covered"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    assert_eq!(newly.iter().sum::<u64>(), 9u64.pow(4));
    assert_eq!(
        cov["witness"].as_array().unwrap().len(),
        7,
        "witness lives in the code's ambient space"
    );
}

#[test]
fn nullspace_dual_matches_functional_dual_up_to_row_space() {
    let art = scratch("for_nullspace.json");
    run(&[
        "construct",
        "--curve",
        "elliptic",
        "--p",
        "3",
        "--e",
        "2",
        "--a",
        "1",
        "--b",
        "0",
        "--support",
        "complete-fibers:4",
        "--variant",
        "roth-lempel",
        "--delta",
        "2",
        "--m",
        "4",
        "--out",
        art.to_str().unwrap(),
    ]);

    let d1 = stdout_json(&run(&["dual", art.to_str().unwrap(), "--method", "functional"]));
    let d2 = stdout_json(&run(&["dual", art.to_str().unwrap(), "--method", "nullspace"]));
    assert_eq!(d1["dual"]["orthogonal"], true);
    assert_eq!(d2["dual"]["orthogonal"], true);
    assert_eq!(d1["dual"]["lambda"], serde_json::json!([2, 2, 2]));
    assert!(d2["dual"]["lambda"].is_null());
    assert_eq!(
        d1["generator"].as_array().unwrap().len(),
        d2["generator"].as_array().unwrap().len()
    );
}

#[test]
fn functional_dual_requires_complete_fibers() {
    let art = scratch("multiples.json");
    run(&[
        "construct",
        "--curve",
        "elliptic",
        "--p",
        "19",
        "--a",
        "18",
        "--b",
        "4",
        "--support",
        "multiples-of:0,2,6",
        "--variant",
        "extended",
        "--m",
        "3",
        "--out",
        art.to_str().unwrap(),
    ]);

    let out = run(&["dual", art.to_str().unwrap(), "--method", "functional"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr_text(&out).contains("fiber"),
        "diagnostic should name the fiber problem: {}",
        stderr_text(&out)
    );

    // The kernel-based dual has no such requirement.
    let out = run(&["dual", art.to_str().unwrap(), "--method", "nullspace"]);
    assert!(out.status.success());
}

#[test]
fn analyze_and_dual_refuse_dual_artifacts() {
    let art = scratch("primal_for_refusal.json");
    run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "0,1,2,3",
        "--variant",
        "extended",
        "--m",
        "1",
        "--out",
        art.to_str().unwrap(),
    ]);
    let dual_art = scratch("dual_for_refusal.json");
    run(&[
        "dual",
        art.to_str().unwrap(),
        "--out",
        dual_art.to_str().unwrap(),
    ]);

    for sub in ["analyze", "dual"] {
        let out = run(&[sub, dual_art.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(1), "{sub} accepted a dual artifact");
        assert!(
            stderr_text(&out).contains("dual"),
            "{sub} diagnostic: {}",
            stderr_text(&out)
        );
    }

    // covering-radius, by contrast, accepts it (measuring the dual code).
    let out = run(&["covering-radius", dual_art.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr_text(&out));
}

#[test]
fn tampered_generator_is_rejected() {
    let art = scratch("tamper.json");
    run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "0,1,2,3,4",
        "--variant",
        "extended",
        "--m",
        "2",
        "--out",
        art.to_str().unwrap(),
    ]);

    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(&art).unwrap()).unwrap();
    let cell = &mut v["generator"][0][0];
    let old = cell.as_u64().unwrap();
    *cell = Value::from((old + 1) % 7);
    std::fs::write(&art, serde_json::to_string_pretty(&v).unwrap()).unwrap();

    let out = run(&["analyze", art.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(
        stderr_text(&out).contains("disagrees"),
        "diagnostic: {}",
        stderr_text(&out)
    );
}

#[test]
fn construct_rejects_gap_degrees_with_guidance() {
    // On an elliptic curve 1 is a gap order, so a Roth-Lempel code with
    // m = 2 would need a basis function of pole order exactly 1.
    let out = run(&[
        "construct",
        "--curve",
        "elliptic",
        "--p",
        "3",
        "--e",
        "2",
        "--a",
        "1",
        "--b",
        "0",
        "--support",
        "complete-fibers",
        "--variant",
        "roth-lempel",
        "--delta",
        "0",
        "--m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = stderr_text(&out);
    assert!(msg.contains("pole order"), "diagnostic: {msg}");

    // The plain code at the same degree is fine (its basis just skips
    // the gap), as is the extended code at m = 2.
    for variant in ["plain", "extended"] {
        let out = run(&[
            "construct",
            "--curve",
            "elliptic",
            "--p",
            "3",
            "--e",
            "2",
            "--a",
            "1",
            "--b",
            "0",
            "--support",
            "complete-fibers",
            "--variant",
            variant,
            "--m",
            "2",
        ]);
        assert!(out.status.success(), "{variant}: {}", stderr_text(&out));
    }
}

#[test]
fn construct_validates_family_flags() {
    // Elliptic without coefficients.
    let out = run(&[
        "construct",
        "--curve",
        "elliptic",
        "--p",
        "19",
        "--support",
        "all-affine",
        "--variant",
        "plain",
        "--m",
        "3",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_text(&out).contains("--a"));

    // Hermitian over the wrong field.
    let out = run(&[
        "construct",
        "--curve",
        "hermitian",
        "--p",
        "19",
        "--q0",
        "3",
        "--support",
        "all-affine",
        "--variant",
        "plain",
        "--m",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // Unknown support recipe.
    let out = run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "every-other-point",
        "--variant",
        "plain",
        "--m",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn covering_radius_respects_weight_cap() {
    let art = scratch("capped.json");
    run(&[
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "all-affine",
        "--variant",
        "extended",
        "--m",
        "2",
        "--out",
        art.to_str().unwrap(),
    ]);

    let out = bin()
        .args(["--weight-cap", "1", "covering-radius", art.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1), "cap below rho must fail");
    assert!(
        stderr_text(&out).contains("weight"),
        "diagnostic: {}",
        stderr_text(&out)
    );
}

#[test]
fn reproduce_lists_and_runs_the_registry() {
    let out = run(&["reproduce", "--list"]);
    assert!(out.status.success());
    let listing = String::from_utf8_lossy(&out.stdout).into_owned();
    for id in [
        "EX-19-MULTIPLES",
        "EX-9-FULL",
        "EX-9-TORSIONFREE",
        "EX-9-EIGHTPOINTS",
        "EX-HERM-3",
    ] {
        assert!(listing.contains(id), "missing {id} in listing:\n{listing}");
    }

    let checks = stdout_json(&run(&["reproduce", "EX-19-MULTIPLES"]));
    let rows = checks.as_array().unwrap();
    assert!(rows.len() >= 10);
    for row in rows {
        assert_eq!(row["status"], "PASS", "{row}");
        assert_eq!(row["example"], "EX-19-MULTIPLES");
        assert!(row["provenance"] == "reported" || row["provenance"] == "derived");
    }

    let out = run(&["--format", "text", "reproduce", "EX-19-MULTIPLES"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("passed"), "{text}");

    let out = run(&["reproduce", "EX-NOPE"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_text(&out).contains("unknown example id"));
}

#[test]
fn text_format_prints_summary_without_artifact() {
    let out = run(&[
        "--format",
        "text",
        "construct",
        "--curve",
        "line",
        "--p",
        "7",
        "--support",
        "0,1,2",
        "--variant",
        "plain",
        "--m",
        "1",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout).into_owned();
    assert!(text.contains("[3, 2]"), "summary missing parameters: {text}");
    // No --out and no JSON mode: nothing should claim a file was written.
    assert!(!text.contains(".json"), "{text}");
}
