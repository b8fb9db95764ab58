//! Drives the compiled `kappa` binary end to end: report shapes, worked
//! values, warnings, exit codes, and byte-level determinism.

use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;

const K3_WEIGHTED: &str = r#"{"vertex_count":3,"edges":[
  {"u":0,"v":1,"w":"1"},{"u":0,"v":2,"w":"2"},{"u":1,"v":2,"w":"3"}]}"#;
const K3_UNIT: &str = r#"{"vertex_count":3,"edges":[
  {"u":0,"v":1},{"u":0,"v":2},{"u":1,"v":2}]}"#;
const K4_UNIT: &str = r#"{"vertex_count":4,"edges":[
  {"u":0,"v":1},{"u":0,"v":2},{"u":0,"v":3},{"u":1,"v":2},{"u":1,"v":3},{"u":2,"v":3}]}"#;
const TWO_COMPONENTS: &str = r#"{"vertex_count":4,"edges":[
  {"u":0,"v":1},{"u":2,"v":3}]}"#;
const SINGLE_EDGE: &str = r#"{"vertex_count":2,"edges":[{"u":0,"v":1,"w":"7/2"}]}"#;
// (1-λ²) + λ²D - λA with the anchor where both preconditions hold.
const SPEC_ANCHORED: &str = r#"{
  "f": [{"coef":"1","dl":0,"dm":0},{"coef":"-1","dl":2,"dm":0}],
  "g": [{"coef":"1","dl":2,"dm":0}],
  "h": [{"coef":"-1","dl":1,"dm":0}],
  "anchor": ["1","0"]}"#;
const SPEC_NO_ANCHOR: &str = r#"{
  "f": [{"coef":"1","dl":0,"dm":0},{"coef":"-1","dl":2,"dm":0}],
  "g": [{"coef":"1","dl":2,"dm":0}],
  "h": [{"coef":"-1","dl":1,"dm":0}]}"#;

struct Run {
    status: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout)
            .unwrap_or_else(|e| panic!("stdout is not JSON ({e}):\n{}", self.stdout))
    }

    fn result(&self, key: &str) -> String {
        self.json()["results"][key]
            .as_str()
            .unwrap_or_else(|| panic!("missing result {key:?}:\n{}", self.stdout))
            .to_string()
    }

    fn checks(&self) -> Vec<(String, bool)> {
        self.json()["checks"]
            .as_array()
            .expect("checks array")
            .iter()
            .map(|c| (c["name"].as_str().unwrap().to_string(), c["equal"].as_bool().unwrap()))
            .collect()
    }

    fn warnings(&self) -> Vec<String> {
        self.json()["warnings"]
            .as_array()
            .expect("warnings array")
            .iter()
            .map(|w| w.as_str().unwrap().to_string())
            .collect()
    }

    fn assert_all_checks_pass(&self) {
        for (name, equal) in self.checks() {
            assert!(equal, "check {name:?} failed:\n{}", self.stdout);
        }
    }
}

fn run(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_kappa"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        status: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn run_ok(args: &[&str]) -> Run {
    let r = run(args);
    assert_eq!(r.status, 0, "expected exit 0 for {args:?}\nstderr: {}", r.stderr);
    r
}

fn run_err(args: &[&str]) -> Run {
    let r = run(args);
    assert_eq!(r.status, 1, "expected exit 1 for {args:?}\nstdout: {}", r.stdout);
    r
}

fn write(dir: &Path, name: &str, contents: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, contents).expect("write temp file");
    path.display().to_string()
}

#[test]
fn cofactor_and_enumeration_agree_on_weighted_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.json", K3_WEIGHTED);

    let r = run_ok(&["kappa", "--graph", &g]);
    assert_eq!(r.result("kappa"), "11");
    assert_eq!(r.json()["inputs"]["cofactor_index"], "1,1");

    let r = run_ok(&["kappa", "--graph", &g, "--cofactor-index", "2,3"]);
    assert_eq!(r.result("kappa"), "11");

    let r = run_ok(&["kappa", "--graph", &g, "--method", "enumerate"]);
    assert_eq!(r.result("kappa"), "11");
    assert_eq!(r.result("tree_count"), "3");
}

#[test]
fn report_shape_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.json", K3_WEIGHTED);
    let r = run_ok(&["kappa", "--graph", &g]);
    let json = r.json();
    let keys: Vec<&str> = json.as_object().unwrap().keys().map(String::as_str).collect();
    let mut sorted = vec!["command", "inputs", "results", "checks", "warnings"];
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
    // Rendering order is fixed (field order, not alphabetical).
    let positions: Vec<usize> = ["\"command\"", "\"inputs\"", "\"results\"", "\"checks\"", "\"warnings\""]
        .iter()
        .map(|k| r.stdout.find(k).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "section order: {positions:?}");
    assert_eq!(json["command"], "kappa");
    assert_eq!(json["inputs"]["vertex_count"], "3");
    assert_eq!(json["inputs"]["edge_count"], "3");
}

#[test]
fn cofactor_index_is_rejected_for_enumeration() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.json", K3_WEIGHTED);
    let r = run_err(&["kappa", "--graph", &g, "--method", "enumerate", "--cofactor-index", "1,1"]);
    assert!(r.stderr.contains("cofactor method"), "stderr: {}", r.stderr);

    let r = run_err(&["kappa", "--graph", &g, "--cofactor-index", "first,second"]);
    assert!(r.stderr.contains("1-based"), "stderr: {}", r.stderr);
}

#[test]
fn disconnected_graph_reports_zero_with_warning() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "split.json", TWO_COMPONENTS);
    let r = run_ok(&["kappa", "--graph", &g]);
    assert_eq!(r.result("kappa"), "0");
    assert_eq!(r.warnings(), ["graph is disconnected"]);
}

#[test]
fn sigma_jet_reports_underlying_kappa() {
    let dir = tempfile::tempdir().unwrap();
    let unit = write(dir.path(), "k3u.json", K3_UNIT);
    let weighted = write(dir.path(), "k3.json", K3_WEIGHTED);

    let r = run_ok(&["kappa-sigma", "--graph", &unit]);
    assert_eq!(r.result("kappa_sigma"), "6");
    assert_eq!(r.result("underlying_kappa"), "3");

    let r = run_ok(&["kappa-sigma", "--graph", &weighted]);
    assert_eq!(r.result("kappa_sigma"), "12");
    assert_eq!(r.result("underlying_kappa"), "3");

    let r = run_ok(&["kappa-sigma", "--graph", &weighted, "--method", "enumerate"]);
    assert_eq!(r.result("kappa_sigma"), "12");
    assert_eq!(r.result("tree_count"), "3");
}

#[test]
fn single_edge_sigma_is_its_weight() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "edge.json", SINGLE_EDGE);
    let r = run_ok(&["kappa-sigma", "--graph", &g]);
    assert_eq!(r.result("kappa_sigma"), "7/2");
    assert_eq!(r.result("underlying_kappa"), "1");
}

#[test]
fn preset_partials_report_identity_checks() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4_UNIT);
    for (preset, value, check_name) in [
        ("northshield", "64", "northshield identity (∂/∂u)"),
        ("mizuno-sato", "64", "mizuno-sato identity (∂/∂lambda)"),
        ("gencharpoly", "192", "gencharpoly identity (∂/∂mu)"),
        ("bartholdi", "-64", "bartholdi identity (∂/∂t)"),
        ("laplacian-charpoly", "-64", "laplacian-charpoly identity (∂/∂mu)"),
    ] {
        let r = run_ok(&["detfun", "--graph", &k4, "--preset", preset, "partial"]);
        assert_eq!(r.result("value"), value, "preset {preset}");
        let checks = r.checks();
        assert_eq!(checks.len(), 1, "preset {preset}");
        assert_eq!(checks[0], (check_name.to_string(), true));
    }
}

#[test]
fn eval_needs_no_anchor_and_matches_substitution() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3u.json", K3_UNIT);
    let r = run_ok(&["detfun", "--graph", &k3, "--preset", "mizuno-sato", "eval", "0", "0"]);
    assert_eq!(r.result("value"), "1");
    assert!(r.checks().is_empty());
}

#[test]
fn mixed_partial_reports_identity_check() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3u.json", K3_UNIT);
    let r = run_ok(&["detfun", "--graph", &k3, "--preset", "mizuno-sato", "mixed", "lambda"]);
    assert_eq!(r.result("value"), "18");
    assert_eq!(r.checks(), [("mixed-partial identity".to_string(), true)]);
}

#[test]
fn weighted_graph_skips_unit_only_identity_check() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.json", K3_WEIGHTED);
    let r = run_ok(&["detfun", "--graph", &k3, "--preset", "northshield", "partial"]);
    assert!(r.checks().is_empty());
    assert_eq!(r.warnings().len(), 1);
    assert!(r.warnings()[0].contains("unit weights required"), "{:?}", r.warnings());

    // mizuno-sato holds for arbitrary weights, so the check stays.
    let r = run_ok(&["detfun", "--graph", &k3, "--preset", "mizuno-sato", "partial"]);
    assert_eq!(r.result("value"), "66");
    assert_eq!(r.checks().len(), 1);
    r.assert_all_checks_pass();
}

#[test]
fn spec_file_partial_and_anchor_errors() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.json", K3_WEIGHTED);
    let spec = write(dir.path(), "spec.json", SPEC_ANCHORED);

    let r = run_ok(&["detfun", "--graph", &k3, "--spec", &spec, "partial", "lambda"]);
    assert_eq!(r.result("value"), "66");
    assert!(r.checks().is_empty(), "custom specs carry no identity check");

    // Anchor failing the f-precondition is reported by name.
    let bad = write(dir.path(), "bad.json", &SPEC_ANCHORED.replace("[\"1\",\"0\"]", "[\"0\",\"0\"]"));
    let r = run_err(&["detfun", "--graph", &k3, "--spec", &bad, "partial", "lambda"]);
    assert!(r.stderr.contains("f(0,0) = 1"), "stderr: {}", r.stderr);

    // No anchor at all: eval works, partial does not.
    let no_anchor = write(dir.path(), "free.json", SPEC_NO_ANCHOR);
    run_ok(&["detfun", "--graph", &k3, "--spec", &no_anchor, "eval", "2", "5"]);
    let r = run_err(&["detfun", "--graph", &k3, "--spec", &no_anchor, "partial", "lambda"]);
    assert!(r.stderr.contains("no anchor given"), "stderr: {}", r.stderr);
}

#[test]
fn verify_suites_pass_and_exit_zero() {
    let r = run_ok(&["verify", "all", "--seed", "5", "--count", "3"]);
    assert!(r.checks().len() >= 3 * 4 + 5, "got {} checks", r.checks().len());
    r.assert_all_checks_pass();
}

#[test]
fn verify_accepts_fixed_graph_and_spec() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.json", K3_WEIGHTED);
    let spec = write(dir.path(), "spec.json", SPEC_ANCHORED);
    let r = run_ok(&["verify", "theorem1", "--graph", &k3, "--spec", &spec]);
    let checks = r.checks();
    assert_eq!(checks.len(), 2, "one case per variable");
    assert!(checks[0].0.contains("∂/∂lambda") && checks[1].0.contains("∂/∂mu"));
    r.assert_all_checks_pass();
}

#[test]
fn corollary_suite_emits_discrepancy_warning() {
    let r = run_ok(&["verify", "corollaries"]);
    let checks = r.checks();
    assert_eq!(checks.len(), 5);
    r.assert_all_checks_pass();
    let warnings = r.warnings();
    assert_eq!(warnings.len(), 1);
    assert!(warnings[0].contains("printed at (t,u) = (1,0)"), "{}", warnings[0]);
    assert!(warnings[0].contains("f(1,0) = 1"), "{}", warnings[0]);
    assert!(warnings[0].contains("evaluates at (t,u) = (0,1)"), "{}", warnings[0]);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let first = run_ok(&["verify", "theorem1", "--seed", "9", "--count", "4"]);
    let second = run_ok(&["verify", "theorem1", "--seed", "9", "--count", "4"]);
    assert_eq!(first.stdout, second.stdout);

    let dir = tempfile::tempdir().unwrap();
    let k4 = write(dir.path(), "k4.json", K4_UNIT);
    let a = run_ok(&["detfun", "--graph", &k4, "--preset", "bartholdi", "partial"]);
    let b = run_ok(&["detfun", "--graph", &k4, "--preset", "bartholdi", "partial"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn gen_writes_loadable_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json").display().to_string();

    let r = run_ok(&["gen", "complete", "4", "--out", &out]);
    assert_eq!(r.result("vertex_count"), "4");
    assert_eq!(r.result("edge_count"), "6");
    let r = run_ok(&["kappa", "--graph", &out]);
    assert_eq!(r.result("kappa"), "16");

    let r = run_ok(&["gen", "hypercube", "3", "--out", &out]);
    assert_eq!(r.result("vertex_count"), "8");
    assert_eq!(r.result("edge_count"), "12");
    let r = run_ok(&["kappa", "--graph", &out]);
    assert_eq!(r.result("kappa"), "384");

    let r = run_ok(&["gen", "hamming", "2,3", "--w", "1,2", "--out", &out]);
    assert_eq!(r.result("vertex_count"), "6");
    assert_eq!(r.result("edge_count"), "9");
    assert_eq!(r.result("total_weight"), "15");
}

#[test]
fn gen_respects_vertex_budget() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json").display().to_string();
    let r = run_err(&["gen", "hypercube", "13", "--out", &out]);
    assert!(r.stderr.contains("8192"), "stderr: {}", r.stderr);
    assert!(r.stderr.contains("4096"), "stderr: {}", r.stderr);
    run_ok(&["gen", "hypercube", "13", "--out", &out, "--budget", "8192"]);
}

#[test]
fn hamming_closed_forms_and_cross_checks() {
    let r = run_ok(&["hamming", "2,2,2", "kappa", "--check"]);
    assert_eq!(r.result("kappa"), "384");
    assert_eq!(r.checks().len(), 1);
    r.assert_all_checks_pass();

    let r = run_ok(&["hamming", "2,2", "kappa-sigma", "--w", "1,2", "--check"]);
    assert_eq!(r.result("kappa_sigma"), "18");
    let names: Vec<String> = r.checks().into_iter().map(|(n, _)| n).collect();
    assert!(names.contains(&"closed form vs jet".to_string()), "{names:?}");
    assert!(
        names.contains(&"general form vs equal-size specialization".to_string()),
        "{names:?}"
    );
    r.assert_all_checks_pass();

    let r = run_ok(&["hamming", "2,3", "spectrum", "--check"]);
    assert_eq!(r.result("multiplicity_total"), "6");
    let spectrum = r.json()["results"]["spectrum"].clone();
    let entries: Vec<(String, String)> = spectrum
        .as_array()
        .unwrap()
        .iter()
        .map(|e| {
            (
                e["eigenvalue"].as_str().unwrap().to_string(),
                e["multiplicity"].as_str().unwrap().to_string(),
            )
        })
        .collect();
    let expect =
        [("0", "1"), ("2", "1"), ("3", "2"), ("5", "2")].map(|(a, b)| (a.into(), b.into()));
    assert_eq!(entries, expect);
    r.assert_all_checks_pass();

    let r = run_ok(&["hamming", "2,2,2", "mst", "--w", "1,2,3", "--check"]);
    assert_eq!(r.result("mst"), "11");
    r.assert_all_checks_pass();
}

#[test]
fn hamming_cross_check_is_budgeted() {
    let r = run_ok(&["hamming", "3,3,3", "kappa", "--check"]);
    assert!(r.checks().is_empty());
    assert_eq!(r.warnings(), ["cross-check skipped: vertex total exceeds 16"]);
}

#[test]
fn hamming_spec_file_matches_inline_arguments() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write(dir.path(), "h.json", r#"{"sizes":[2,2],"weights":["1","2"]}"#);
    let from_file = run_ok(&["hamming", "--spec", &spec, "kappa-sigma"]);
    assert_eq!(from_file.result("kappa_sigma"), "18");
    let inline = run_ok(&["hamming", "2,2", "kappa-sigma", "--w", "1,2"]);
    assert_eq!(from_file.json()["results"], inline.json()["results"]);
}

#[test]
fn mst_requires_a_hypercube() {
    let r = run_err(&["hamming", "2,3", "mst"]);
    assert!(r.stderr.contains("hypercubes only"), "stderr: {}", r.stderr);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.json", K3_UNIT);

    run_err(&["kappa", "--graph", "/nonexistent/graph.json"]);
    run_err(&["nonsense"]);
    run_err(&["kappa", "--graph", &k3, "--method", "bogus"]);
    run_err(&["hamming", "2,2", "bogus"]);
    run_err(&["hamming", "0,2", "kappa"]);

    let r = run_err(&["detfun", "--graph", &k3, "partial"]);
    assert!(r.stderr.contains("--spec or --preset"), "stderr: {}", r.stderr);

    let r = run_err(&["detfun", "--graph", &k3, "--preset", "unknown", "partial"]);
    assert!(r.stderr.contains("unknown"), "stderr: {}", r.stderr);

    let r = run_err(&["detfun", "--graph", &k3, "--preset", "mizuno-sato", "partial", "sigma"]);
    assert!(r.stderr.contains("lambda or mu"), "stderr: {}", r.stderr);
}

#[test]
fn help_and_version_exit_zero() {
    run_ok(&["--help"]);
    run_ok(&["--version"]);
    run_ok(&["kappa", "--help"]);
}

#[test]
fn malformed_graph_files_name_the_defect() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        (r#"{"vertex_count":2,"edges":[{"u":0,"v":0}]}"#, "loop"),
        (r#"{"vertex_count":2,"edges":[{"u":0,"v":5}]}"#, "out of range"),
        (
            r#"{"vertex_count":3,"edges":[{"u":0,"v":1},{"u":1,"v":0}]}"#,
            "duplicate",
        ),
        (r#"{"vertex_count":2,"edges":[{"u":0,"v":1,"weight":"2"}]}"#, "unknown field"),
        (r#"{"vertex_count":2,"edges":["#, "EOF"),
    ];
    for (i, (contents, needle)) in cases.iter().enumerate() {
        let path = write(dir.path(), &format!("bad{i}.json"), contents);
        let r = run_err(&["kappa", "--graph", &path]);
        assert!(
            r.stderr.contains(needle),
            "case {i}: expected {needle:?} in stderr: {}",
            r.stderr
        );
        assert!(r.stderr.contains(&path), "error names the file: {}", r.stderr);
    }
}
