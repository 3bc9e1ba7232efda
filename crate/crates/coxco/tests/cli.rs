//! End-to-end tests of the command-line binary: output formats, exit codes,
//! stderr channels, and byte-level determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_coxco"))
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

/// Collapses runs of spaces so assertions survive column alignment.
fn norm(text: &str) -> String {
    text.lines()
        .map(|line| line.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn analyze_text_reports_the_hyperbolic_triangle() {
    let out = run(&["analyze", data("triangle_245.cox").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = norm(&stdout(&out));
    assert!(text.contains("two-dimensional: yes"), "{text}");
    assert!(text.contains("chi: -1/40"), "{text}");
    assert!(text.contains("coherence: coherent"), "{text}");
    assert!(text.contains("l2-betti: (0, 1/40, 0)"), "{text}");
    assert!(
        !text.contains("time:"),
        "timing shown without --timing: {text}"
    );
}

#[test]
fn analyze_json_is_schema_stable() {
    let out = run(&[
        "analyze",
        data("triangle_245.cox").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let doc: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["chi"], "-1/40");
    assert_eq!(doc["coherence"]["verdict"], "coherent");
    assert_eq!(doc["coherence"]["l2_betti"][1], "1/40");
    assert_eq!(doc["two_dimensional"]["holds"], true);
    assert!(doc.get("timing_ms").is_none(), "timing absent by default");
    assert!(
        doc.get("curvature").is_none(),
        "no curvature section for .cox input"
    );
    // Rationals cross the wire as strings, never as floats.
    assert!(text.contains("\"chi\": \"-1/40\""), "{text}");
}

#[test]
fn analyze_timing_flag_adds_the_field() {
    let out = run(&[
        "analyze",
        data("triangle_245.cox").to_str().unwrap(),
        "--format",
        "json",
        "--timing",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc.get("timing_ms").is_some());
}

#[test]
fn analyze_incoherent_system_reports_witness() {
    let out = run(&[
        "analyze",
        data("k33.cox").to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["coherence"]["verdict"], "incoherent");
    assert_eq!(doc["coherence"]["witness_chi"], "1/4");
    assert_eq!(
        doc["coherence"]["witness"],
        serde_json::json!([0, 1, 2, 3, 4, 5])
    );
}

#[test]
fn strict_mode_exits_three_when_not_applicable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flat.cox");
    std::fs::write(&path, "rank 3\n0 1 3\n0 2 3\n1 2 2\n").unwrap();
    // The (3,3,2) triple generates a finite rank-3 group, so the system is
    // not two-dimensional and the coherence verdict is not applicable.
    let strict = run(&["analyze", path.to_str().unwrap(), "--strict"]);
    assert_eq!(strict.status.code(), Some(3));
    let relaxed = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(relaxed.status.code(), Some(0));
    assert!(norm(&stdout(&relaxed)).contains("coherence: not applicable"));
}

#[test]
fn parse_errors_exit_two_with_one_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cox");
    std::fs::write(&path, "rank 3\n0 1 1\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error: "), "{err}");
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn missing_files_and_bad_usage_exit_one() {
    let missing = run(&["analyze", "/nonexistent/no.cox"]);
    assert_eq!(missing.status.code(), Some(1));
    assert!(stderr(&missing).starts_with("error: "));

    let no_args = binary().output().unwrap();
    assert_eq!(no_args.status.code(), Some(1));

    let bad_flag = run(&[
        "analyze",
        "--format",
        "yaml",
        data("triangle_245.cox").to_str().unwrap(),
    ]);
    assert_eq!(bad_flag.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("sc-check"));
}

#[test]
fn sc_check_reports_the_genus_two_relator() {
    let out = run(&["sc-check", data("genus2.pres").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = norm(&stdout(&out));
    assert!(text.contains("max piece 1"), "{text}");
    assert!(text.contains("ratio 1/8"), "{text}");
    assert!(text.contains("C'(1/6): holds"), "{text}");
    assert!(text.contains("inconclusive (n <= m - 1)"), "{text}");
}

#[test]
fn sc_check_certifies_the_stored_presentation() {
    let out = run(&["sc-check", data("certified_2_3.pres").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = norm(&stdout(&out));
    assert!(text.contains("certificate: incoherent"), "{text}");
    assert!(text.contains("chi = 2 > 0"), "{text}");
}

#[test]
fn sc_check_custom_lambda_threshold() {
    // Genus-two ratio is 1/8, which fails a stricter 1/10 threshold.
    let out = run(&[
        "sc-check",
        data("genus2.pres").to_str().unwrap(),
        "--lambda",
        "1/10",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        norm(&stdout(&out)).contains("C'(1/10): fails"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn sc_check_warns_about_unreduced_relators_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("raw.pres");
    std::fs::write(&path, "gens 2\nrel abBa\n").unwrap();
    let out = run(&["sc-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stderr(&out).contains("warning:"), "{}", stderr(&out));
    assert!(stderr(&out).contains("reduced to 'aa'"), "{}", stderr(&out));
}

#[test]
fn sc_check_rejects_vanishing_relators() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.pres");
    std::fs::write(&path, "gens 2\nrel aA\n").unwrap();
    let out = run(&["sc-check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr(&out).contains("reduces to the empty word"),
        "{}",
        stderr(&out)
    );
}

#[test]
fn random_is_byte_deterministic_across_runs_and_threads() {
    let args = [
        "random",
        "--gens",
        "2",
        "--rels",
        "3",
        "--lengths",
        "20,40",
        "--trials",
        "30",
        "--seed",
        "7",
    ];
    let first = binary()
        .args(args)
        .env("COXCO_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.status.code(), Some(0), "stderr: {}", stderr(&first));
    for threads in ["1", "4", "8"] {
        let next = binary()
            .args(args)
            .env("COXCO_THREADS", threads)
            .output()
            .unwrap();
        assert_eq!(next.status.code(), Some(0));
        assert_eq!(first.stdout, next.stdout, "threads={threads}");
    }
}

#[test]
fn random_csv_flag_writes_the_same_bytes_to_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("rates.csv");
    let args = [
        "random",
        "--gens",
        "2",
        "--rels",
        "2",
        "--lengths",
        "15,30",
        "--trials",
        "25",
        "--seed",
        "11",
    ];
    let to_stdout = binary().args(args).output().unwrap();
    let to_file = binary()
        .args(args)
        .args(["--csv", csv_path.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(to_file.status.code(), Some(0));
    assert!(
        to_file.stdout.is_empty(),
        "--csv must not duplicate rows on stdout"
    );
    let written = std::fs::read(&csv_path).unwrap();
    assert_eq!(written, to_stdout.stdout);
    let text = String::from_utf8(written).unwrap();
    assert!(text.starts_with("l,trials,c16_rate,no_pp_rate,certified_rate,wilson_lo,wilson_hi\n"));
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn random_rejects_degenerate_parameters() {
    let out = run(&[
        "random",
        "--gens",
        "1",
        "--rels",
        "2",
        "--lengths",
        "10",
        "--trials",
        "5",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).starts_with("error: "));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let out = binary()
        .args([
            "random",
            "--gens",
            "2",
            "--rels",
            "2",
            "--lengths",
            "10",
            "--trials",
            "5",
        ])
        .env("COXCO_THREADS", "abc")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("COXCO_THREADS"));
}

#[test]
fn curvature_reports_flat_torus_exactly() {
    let out = run(&["curvature", data("square_torus.cx2").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = norm(&stdout(&out));
    assert!(text.contains("chi = 0"), "{text}");
    assert!(
        text.contains("total curvature: 0 pi (equals 2 pi chi, exactly)"),
        "{text}"
    );
}

#[test]
fn curvature_reports_the_sphere_and_the_genus_two_surface() {
    let sphere = run(&["curvature", data("tetrahedron.cx2").to_str().unwrap()]);
    assert!(
        norm(&stdout(&sphere)).contains("total curvature: 4 pi"),
        "{}",
        stdout(&sphere)
    );
    assert!(
        norm(&stdout(&sphere)).contains("chi = 2"),
        "{}",
        stdout(&sphere)
    );
    let octagon = run(&["curvature", data("genus2_octagon.cx2").to_str().unwrap()]);
    assert!(
        norm(&stdout(&octagon)).contains("total curvature: -4 pi"),
        "{}",
        stdout(&octagon)
    );
    assert!(
        norm(&stdout(&octagon)).contains("chi = -2"),
        "{}",
        stdout(&octagon)
    );
}

#[test]
fn curvature_rejects_malformed_complexes_as_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.cx2");
    std::fs::write(
        &path,
        "vertices 1\nedge 0 0 0\nface 0 0 -0\nangle 0 5 1/2\n",
    )
    .unwrap();
    let out = run(&["curvature", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).starts_with("error: "));
}
