use std::path::Path;
use std::process::Command;

use eqcohom::bundled::bundled;
use eqcohom::report::Report;
use eqcohom::{run_source, ExitStatus, RunOptions};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_eqcohom"))
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn verified() -> RunOptions {
    RunOptions {
        verify: true,
        ..RunOptions::default()
    }
}

#[test]
fn su3_s7_text_report() {
    let out = bin().args(["run", "bundled:su3_s7", "--verify"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for needle in ["k = 3", "case III", "sphere degree 7", "verification: pass"] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
}

#[test]
fn so3_rp3_is_rejected() {
    let out = bin().args(["run", "bundled:so3_rp3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("S⁰ leg"));
    assert!(String::from_utf8(out.stdout).unwrap().contains("S⁰ leg"));
}

#[test]
fn non_square_matrix_is_a_positioned_parse_error() {
    let out = bin().args(["run", &fixture("non_square.spec")]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 7, column 15"), "{err}");
    assert!(out.stdout.is_empty());
}

#[test]
fn mislabeled_sphere_fails_validation() {
    let out = bin().args(["run", &fixture("mislabeled_c3_s3.spec")]).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("freeness identity fails"));
}

#[test]
fn unknown_bundled_name() {
    let out = bin().args(["run", "bundled:nope"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn list_names_every_bundled_spec() {
    let out = bin().arg("list").output().unwrap();
    let names: Vec<String> = String::from_utf8(out.stdout).unwrap().lines().map(String::from).collect();
    assert_eq!(names.len(), 10);
    assert!(names.iter().any(|n| n == "torus_flip"));
}

#[test]
fn machine_report_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let status = bin()
        .args(["run", "bundled:su3_s7", "--verify", "--format", "machine", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let parsed = Report::from_json(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let in_process = run_source(bundled("su3_s7").unwrap(), &verified()).report.unwrap();
    assert_eq!(parsed, in_process);
    assert_eq!(parsed.series.len(), 41);
    assert_eq!(parsed.series[7], "1");
    assert_eq!(parsed.k, Some(3));
}

#[test]
fn machine_report_is_deterministic() {
    let run = || {
        bin()
            .args(["run", "bundled:u2_oddeven", "--verify", "--format", "machine", "--seed", "7", "--trials", "20"])
            .output()
            .unwrap()
            .stdout
    };
    let a = run();
    assert!(!a.is_empty());
    assert_eq!(a, run());
}

#[test]
fn series_are_exact_strings() {
    let r = run_source(bundled("sp2").unwrap(), &RunOptions::default()).report.unwrap();
    let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert!(json["series"].as_array().unwrap().iter().all(|v| v.is_string()));
    assert!(json["verification"].is_null());
}

#[test]
fn corrupted_shape_gives_status_four() {
    // A presentation whose stored series is wrong cannot come out of the
    // pipeline, so exercise the mismatch path through the library.
    use eqcohom_core::algebra::{BaseRing, PresentationShape};
    use eqcohom_core::cohomology::present;
    use eqcohom_core::verify::verify;
    let spec = eqcohom::parse_spec(bundled("su3_s7").unwrap()).unwrap();
    let mut p = present(&spec, 40).unwrap();
    p.shape = PresentationShape::FreePolynomial(BaseRing::Polynomial(vec![4, 6]));
    let v = verify(&spec, &p, 40, 5, 0);
    assert!(!v.passed());
    let mut r = Report::new("x", 40, &eqcohom_core::cohomology::validate(&spec, 40));
    r.set_verification(&v);
    assert_eq!(r.verification.unwrap().verdict, "fail");
    assert_eq!(ExitStatus::Mismatch.code(), 4);
}

fn fenced(doc: &str, lang: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs").join(doc);
    let text = std::fs::read_to_string(path).unwrap();
    let open = format!("```{lang}\n");
    let start = text.find(&open).unwrap() + open.len();
    let end = start + text[start..].find("```").unwrap();
    text[start..end].to_string()
}

#[test]
fn schema_doc_example_is_current() {
    let opts = RunOptions {
        max_degree: 6,
        verify: true,
        trials: 1,
        seed: 0,
    };
    let r = run_source(bundled("torus_flip").unwrap(), &opts).report.unwrap();
    assert_eq!(fenced("report-schema.md", "json"), r.to_json());
}

#[test]
fn format_doc_example_is_the_bundled_spec() {
    assert_eq!(fenced("spec-format.md", "text"), bundled("su3_s7").unwrap());
}
