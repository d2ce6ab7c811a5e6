use std::fs;
use std::path::{Path, PathBuf};

use nijenhuis_cli::docs::{AlgebraDoc, OperatorDoc};
use nijenhuis_cli::{run, Outcome, EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, EXIT_PASS};
use serde_json::Value;
use tempfile::TempDir;

struct Fixture {
    dir: TempDir,
}

fn matrix(rows: &[&[i64]]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect()
}

impl Fixture {
    fn new() -> Self {
        let f = Fixture { dir: TempDir::new().unwrap() };
        let m2 = f.exec(&["builtin", "--name", "matrix", "--size", "2"]);
        assert_eq!(m2.code, EXIT_PASS);
        f.write("m2.json", &m2.stdout);
        let dn = f.exec(&["builtin", "--name", "dual-numbers"]);
        f.write("dual.json", &dn.stdout);
        // basis order E11, E12, E21, E22
        f.operator("p1.json", "M2", &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1]]);
        f.operator("transpose.json", "M2", &[&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 1, 0, 0], &[0, 0, 0, 1]]);
        f.operator("nk.json", "M2", &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 2, 0], &[0, 0, 0, 2]]);
        f.operator("diagk.json", "M2", &[&[1, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 2]]);
        f.operator("id.json", "M2", &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]]);
        // commutator with E11
        f.operator("ad11.json", "M2", &[&[0, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 0]]);
        f.write("upper.json", r#"{"part1": [0, 1, 3]}"#);
        f.write("diag.json", r#"{"part1": [0, 3]}"#);
        f
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, text: &str) {
        fs::write(self.path(name), text).unwrap();
    }

    fn operator(&self, name: &str, algebra: &str, rows: &[&[i64]]) {
        let doc = OperatorDoc { algebra: algebra.to_string(), matrix: matrix(rows) };
        self.write(name, &serde_json::to_string(&doc).unwrap());
    }

    /// Runs a command, resolving `@name` arguments to fixture files.
    fn exec(&self, args: &[&str]) -> Outcome {
        let mut argv = vec![String::from("nijenhuis")];
        for a in args {
            argv.push(match a.strip_prefix('@') {
                Some(name) => self.path(name).display().to_string(),
                None => a.to_string(),
            });
        }
        run(argv)
    }

    fn json(&self, args: &[&str]) -> (i32, Value) {
        let out = self.exec(args);
        assert!(out.stderr.is_empty() || out.code == EXIT_INPUT_ERROR, "{}", out.stderr);
        (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
    }
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"].as_array().unwrap().iter().find(|c| c["name"] == name).unwrap_or_else(|| panic!("no check {name}"))
}

fn read_doc(path: &Path) -> AlgebraDoc {
    serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn projection_passes_check_nijenhuis() {
    let f = Fixture::new();
    let (code, r) = f.json(&["check-nijenhuis", "--algebra", "@m2.json", "--operator", "@p1.json"]);
    assert_eq!(code, EXIT_PASS);
    for name in ["torsion_zero", "deformed_associative", "unit_preserved"] {
        assert_eq!(check(&r, name)["pass"], true);
        assert!(check(&r, name).get("witness").is_none());
    }
    assert_eq!(r["inputs"].as_object().unwrap().len(), 2);
}

#[test]
fn transpose_fails_with_witness() {
    let f = Fixture::new();
    let (code, r) = f.json(&["check-nijenhuis", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    let torsion = check(&r, "torsion_zero");
    assert_eq!(torsion["pass"], false);
    assert_eq!(torsion["witness"].as_array().unwrap().len(), 2);
    let (code, r) = f.json(&["torsion", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    // T(E11, E12) = E21 − E12
    let rows = r["outputs"]["torsion"].as_array().unwrap();
    assert!(rows.contains(&serde_json::json!([0, 1, 2, "1"])));
    assert!(rows.contains(&serde_json::json!([0, 1, 1, "-1"])));
}

#[test]
fn deform_round_trips() {
    let f = Fixture::new();
    let out = f.path("deformed.json");
    let (code, r) = f.json(&["deform", "--algebra", "@m2.json", "--operator", "@nk.json", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let doc = read_doc(&out);
    assert_eq!(serde_json::to_value(&doc).unwrap(), r["outputs"]["product"]);
    assert_eq!(doc.associative, Some(true));
    let alg = doc.to_algebra().unwrap();
    assert_eq!(alg.dim(), 4);
    // E12∘E21 = E12·K·E21 = 2E11 with K = diag(1, 2)
    assert!(doc.structure.contains(&(1, 2, 0, "2".to_string())));
    let again = f.exec(&["cohomology", "--algebra", out.to_str().unwrap(), "--degree", "0"]);
    assert_eq!(again.code, EXIT_PASS);
}

#[test]
fn reports_are_byte_stable() {
    let f = Fixture::new();
    for args in [
        &["check-nijenhuis", "--algebra", "@m2.json", "--operator", "@transpose.json"][..],
        &["hierarchy", "--algebra", "@m2.json", "--operator", "@nk.json", "--max-power", "3"][..],
        &["example", "--id", "2"][..],
    ] {
        let a = f.exec(args);
        let b = f.exec(args);
        assert_eq!(a, b);
    }
}

#[test]
fn input_errors_exit_two() {
    let f = Fixture::new();
    let missing = f.exec(&["check-nijenhuis", "--algebra", "@nope.json", "--operator", "@p1.json"]);
    assert_eq!(missing.code, EXIT_INPUT_ERROR);
    assert!(missing.stdout.is_empty());
    assert!(missing.stderr.contains("cannot read"));
    f.write("bad.json", r#"{"algebra": "M2", "matrix": [["1.5","0","0","0"],["0","1","0","0"],["0","0","0","0"],["0","0","0","1"]]}"#);
    assert_eq!(f.exec(&["torsion", "--algebra", "@m2.json", "--operator", "@bad.json"]).code, EXIT_INPUT_ERROR);
    f.write("nonassoc.json", r#"{"name": "X", "dim": 2, "basis": ["a", "b"], "structure": [[0, 0, 1, "1"], [1, 0, 1, "1"]]}"#);
    assert_eq!(f.exec(&["cohomology", "--algebra", "@nonassoc.json", "--degree", "0"]).code, EXIT_INPUT_ERROR);
    assert_eq!(f.exec(&["cohomology", "--algebra", "@m2.json", "--degree", "3"]).code, EXIT_INPUT_ERROR);
    assert_eq!(f.exec(&["example", "--id", "5", "--lambda", "0.5"]).code, EXIT_INPUT_ERROR);
    // operator over another algebra
    assert_eq!(f.exec(&["torsion", "--algebra", "@dual.json", "--operator", "@p1.json"]).code, EXIT_INPUT_ERROR);
    // not a Nijenhuis tensor
    let out = f.exec(&["hierarchy", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(out.code, EXIT_INPUT_ERROR);
    assert_eq!(f.exec(&["tensors-compat", "--algebra", "@m2.json", "--operator1", "@transpose.json", "--operator2", "@id.json"]).code, EXIT_INPUT_ERROR);
}

#[test]
fn unknown_fields_are_ignored() {
    let f = Fixture::new();
    f.write("extra.json", r#"{"name": "D", "dim": 2, "basis": ["1", "eps"], "comment": "dual numbers",
        "structure": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]], "unit": ["1", "0"], "associative": true}"#);
    let (code, r) = f.json(&["cohomology", "--algebra", "@extra.json", "--degree", "1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r["outputs"]["dimension"], 1);
}

#[test]
fn criterion_and_lie_commands() {
    let f = Fixture::new();
    let (code, r) = f.json(&["criterion", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r["outputs"]["deformed_associative"], r["outputs"]["torsion_is_2cocycle"]);
    let (code, _) = f.json(&["lie-check", "--algebra", "@m2.json", "--operator", "@p1.json"]);
    assert_eq!(code, EXIT_PASS);
    let (code, r) = f.json(&["lie-check", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert_eq!(r["checks"][0]["pass"], true);
    assert_eq!(r["checks"][1]["pass"], false);
}

#[test]
fn tensor_and_split_commands() {
    let f = Fixture::new();
    let (code, r) = f.json(&["tensors-compat", "--algebra", "@m2.json", "--operator1", "@nk.json", "--operator2", "@id.json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r["outputs"]["sum_is_nijenhuis"], true);
    let (code, r) = f.json(&["projection", "--algebra", "@m2.json", "--decomposition", "@upper.json", "--l1", "0", "--l2", "1"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r["outputs"]["product"]["unit"], Value::Null);
    let (code, _) = f.json(&["projection", "--algebra", "@m2.json", "--decomposition", "@upper.json", "--l1", "-1/2", "--l2", "3i"]);
    assert_eq!(code, EXIT_PASS);
    // the diagonal split has a non-subalgebra complement
    assert_eq!(f.exec(&["projection", "--algebra", "@m2.json", "--decomposition", "@diag.json"]).code, EXIT_INPUT_ERROR);
    let (code, _) = f.json(&["contraction", "--algebra", "@m2.json", "--decomposition", "@diag.json"]);
    assert_eq!(code, EXIT_PASS);
    let (code, r) = f.json(&["extend", "--algebra", "@m2.json", "--decomposition", "@diag.json", "--operator", "@diagk.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert_eq!(check(&r, "N1²((A2B2)1) = 0")["witness"], serde_json::json!([1, 2]));
    assert_eq!(check(&r, "N(A) = N1(A1) is a Nijenhuis tensor")["pass"], false);
}

#[test]
fn assembled_product_on_the_diagonal_split() {
    let f = Fixture::new();
    // ∘1 = (A, B) ↦ KAB and N1 = N1' = K·, N2 = id, with K = diag(1, 2)
    f.write("circ1.json", r#"{"name": "M2", "dim": 4, "basis": ["E11", "E12", "E21", "E22"],
        "structure": [[0, 0, 0, "1"], [3, 3, 3, "2"]]}"#);
    let (code, r) = f.json(&[
        "theorem5", "--algebra", "@m2.json", "--decomposition", "@diag.json", "--circ1", "@circ1.json",
        "--n1", "@nk.json", "--n1p", "@nk.json", "--n2", "@id.json",
    ]);
    assert_eq!(code, EXIT_PASS, "{r}");
    let p = r["outputs"]["product"].clone();
    assert_eq!(p["associative"], true);
    f.write("assembled.json", &p.to_string());
    let (code, r) = f.json(&["compat", "--product1", "@m2.json", "--product2", "@assembled.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(r["checks"][0]["witness"].is_array());
}

#[test]
fn derivation_commands() {
    let f = Fixture::new();
    let (code, _) = f.json(&["derivation-check", "--algebra", "@m2.json", "--operator", "@ad11.json"]);
    assert_eq!(code, EXIT_PASS);
    let (code, _) = f.json(&["derivation-check", "--algebra", "@m2.json", "--operator", "@transpose.json"]);
    assert_eq!(code, EXIT_CHECK_FAILED);
    let (code, r) = f.json(&["inner-generator", "--algebra", "@m2.json", "--operator", "@ad11.json"]);
    assert_eq!(code, EXIT_PASS);
    assert_eq!(r["outputs"]["center"].as_array().unwrap().len(), 1);
    let generator: Vec<String> = serde_json::from_value(r["outputs"]["generator"].clone()).unwrap();
    assert_eq!(generator.len(), 4);
    // the generator is E11 modulo the unit
    assert_eq!(generator[1], "0");
    assert_eq!(generator[2], "0");
    let out = f.path("nk_product.json");
    f.exec(&["deform", "--algebra", "@m2.json", "--operator", "@nk.json", "--out", out.to_str().unwrap()]);
    let (code, r) = f.json(&["bihamiltonian", "--algebra", "@m2.json", "--operator", "@ad11.json", "--product2", "@nk_product.json"]);
    assert_eq!(code, EXIT_PASS, "{r}");
    assert_eq!(r["outputs"]["strong"], true);
}

#[test]
fn examples_and_builtins() {
    let f = Fixture::new();
    for id in ["1", "2", "3", "4"] {
        assert_eq!(f.exec(&["example", "--id", id]).code, EXIT_PASS, "example {id}");
    }
    for id in ["5", "6"] {
        assert_eq!(f.exec(&["example", "--id", id, "--dim", "4"]).code, EXIT_PASS);
    }
    let r = f.exec(&["example", "--id", "5", "--dim", "4", "--lambda", "-2"]);
    assert!(r.stdout.contains("a_dag∘a = (-2)·H"));
    for name in ["matrix", "upper-triangular", "dual-numbers", "pauli", "oscillator"] {
        let out = f.exec(&["builtin", "--name", name]);
        let doc: AlgebraDoc = serde_json::from_str(&out.stdout).unwrap();
        doc.to_algebra().unwrap();
    }
    assert_eq!(f.exec(&["example", "--id", "7"]).code, EXIT_INPUT_ERROR);
    assert_eq!(f.exec(&["--help"]).code, EXIT_PASS);
}

#[test]
fn binary_exit_codes() {
    let f = Fixture::new();
    let bin = env!("CARGO_BIN_EXE_nijenhuis");
    let status = |args: &[&str]| {
        let args: Vec<String> = args.iter().map(|a| match a.strip_prefix('@') {
            Some(n) => f.path(n).display().to_string(),
            None => a.to_string(),
        }).collect();
        std::process::Command::new(bin).args(&args).output().unwrap()
    };
    assert_eq!(status(&["check-nijenhuis", "--algebra", "@m2.json", "--operator", "@p1.json"]).status.code(), Some(0));
    assert_eq!(status(&["check-nijenhuis", "--algebra", "@m2.json", "--operator", "@transpose.json"]).status.code(), Some(1));
    let bad = status(&["check-nijenhuis", "--algebra", "@m2.json"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
    assert!(!bad.stderr.is_empty());
}
