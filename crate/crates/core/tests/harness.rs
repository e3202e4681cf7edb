use std::path::Path;
use std::process::Command as Proc;

use morita::harness::suites::size_bound;
use morita::harness::{load_instance_str, parse_instance_file, run_suite, Command, LoadError, Options, Verdict};

const FINSET: &str = include_str!("../fixtures/finset_sample.jsonl");

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn quick() -> Options {
    Options { tuples: 4, triangles: 3, samples: 2, ..Options::default() }
}

#[test]
fn syntax_errors_report_line_and_column() {
    let text = "{\"type\": \"instance\", \"kind\": \"finset_disjoint\"}\n{\"type\": \"monoid\", \"name\": \"A\",, }\n";
    match parse_instance_file(text) {
        Err(LoadError::Parse { line, column, .. }) => {
            assert_eq!(line, 2);
            assert_eq!(column, 32);
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn unknown_references_and_missing_instance_are_parse_errors() {
    let text = "{\"type\": \"instance\", \"kind\": \"finset_disjoint\"}\n{\"type\": \"tensor\", \"name\": \"T\", \"left\": \"M\", \"right\": \"N\"}\n";
    assert!(matches!(parse_instance_file(text), Err(LoadError::Parse { line: 2, .. })));
    let text = "{\"type\": \"monoid\", \"name\": \"A\", \"carrier\": 1, \"mult\": [0, 0], \"unit\": []}\n";
    assert!(matches!(parse_instance_file(text), Err(LoadError::Parse { line: 1, .. })));
    let text = "{\"type\": \"instance\", \"kind\": \"finvect\", \"p\": 6}\n";
    assert!(matches!(parse_instance_file(text), Err(LoadError::Parse { line: 1, .. })));
}

#[test]
fn shape_errors_are_reported() {
    let text = "{\"type\": \"instance\", \"kind\": \"finset_disjoint\"}\n{\"type\": \"monoid\", \"name\": \"A\", \"carrier\": 1, \"mult\": [0], \"unit\": []}\n";
    assert!(matches!(parse_instance_file(text), Err(LoadError::Parse { line: 2, .. })));
}

#[test]
fn validation_failures_name_the_entity_and_diagram() {
    let cases = [
        ("nonequivariant_map.jsonl", "map swap", "equivariance"),
        ("nonassociative_monoid.jsonl", "monoid W", "associativity"),
        ("corrupted_tetrahedron.jsonl", "tetrahedron c0123", "tetrahedron equation"),
    ];
    for (file, entity, diagram) in cases {
        let text = std::fs::read_to_string(fixture(file)).unwrap();
        match load_instance_str(&text) {
            Err(LoadError::Validation { entity: e, diagram: d }) => {
                assert_eq!(e, entity);
                assert!(d.contains(diagram), "{d}");
            }
            other => panic!("{file}: {other:?}"),
        }
    }
}

#[test]
fn declared_tensor_matches_its_balanced_tensor() {
    let f = load_instance_str(FINSET).unwrap();
    let (m, n) = (f.declared.bimodule("M").unwrap(), f.declared.bimodule("N").unwrap());
    let t = f.calc.balanced_tensor(m, n).unwrap();
    assert_eq!(f.declared.bimodule("MN").unwrap(), &t.result);
    assert_eq!(f.declared.equivalences, vec!["M".to_string()]);
}

#[test]
fn product_and_opposite_instances_load() {
    let text = r#"{"type": "instance", "kind": "product", "children": [{"kind": "finset_disjoint"}, {"kind": "finvect", "p": 3}]}
{"type": "monoid", "name": "A", "carrier": [1, 1], "mult": [[0, 0], [[1]]], "unit": [[], [[1]]]}
{"type": "bimodule", "name": "M", "left": "A", "right": "A", "carrier": [1, 1], "lact": [[0, 0], [[1]]], "ract": [[0, 0], [[1]]]}
"#;
    let f = load_instance_str(text).unwrap();
    let small = Options { max_set_size: 3, max_dim: 1, ..quick() };
    assert_eq!(size_bound(&f.spec, &small), 1);
    let r = run_suite(Command::Oracle, &f, &small);
    assert!(r.passed(), "{r}");
    assert!(r.family("oracle tensor").count() > 0);

    let text = r#"{"type": "instance", "kind": "opposite", "children": [{"kind": "finset_disjoint"}]}"#;
    let f = load_instance_str(text).unwrap();
    let r = run_suite(Command::Oracle, &f, &quick());
    assert!(r.passed());
    assert!(r.family("oracle tensor").all(|row| row.verdict == Verdict::Skip));
}

#[test]
fn reports_are_deterministic_and_end_in_json() {
    let f = load_instance_str(FINSET).unwrap();
    let a = run_suite(Command::Calculus, &f, &quick()).to_string();
    let f = load_instance_str(FINSET).unwrap();
    let b = run_suite(Command::Calculus, &f, &quick()).to_string();
    assert_eq!(a, b);
    let last: serde_json::Value = serde_json::from_str(a.lines().last().unwrap()).unwrap();
    assert_eq!(last["format_version"], 1);
    assert_eq!(last["command"], "calculus");
    assert_eq!(last["counts"]["fail"], 0);
    assert_eq!(last["counts"]["pass"], 4 * 12);
}

#[test]
fn validate_reports_every_entity() {
    let text = std::fs::read_to_string(fixture("nonequivariant_map.jsonl")).unwrap();
    let f = parse_instance_file(&text).unwrap();
    let r = run_suite(Command::Validate, &f, &quick());
    assert_eq!(r.rows.len(), 4);
    let failed: Vec<_> = r.failures().collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0].params, "map swap");
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Proc::new(env!("CARGO_BIN_EXE_morita")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn cli_exit_codes() {
    let (code, out) = cli(&["validate", &fixture("finset_sample.jsonl")]);
    assert_eq!(code, 0, "{out}");
    let (code, out) = cli(&["coherence", &fixture("swapped_associator.jsonl")]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL coherence pentagon"));
    let (code, _) = cli(&["nerve", &fixture("corrupted_tetrahedron.jsonl")]);
    assert_eq!(code, 1);
    let (code, _) = cli(&["validate", "/nonexistent.jsonl"]);
    assert_eq!(code, 2);
    let (code, _) = cli(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, out) = cli(&["calculus", "--tuples", "2", "--seed", "7", &fixture("finvect_sample.jsonl")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("\"seed\":7"));
}
