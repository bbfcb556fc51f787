use std::path::{Path, PathBuf};
use std::process::Command;

use semilab::sg;
use semilab_cli::{run, AnalysisReport, EXIT_INPUT, EXIT_OK, EXIT_USAGE};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn semilab(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("semilab").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Run {
        code,
        out: String::from_utf8(out).unwrap(),
        err: String::from_utf8(err).unwrap(),
    }
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn constructed(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let r = semilab(&[&["construct"], args].concat());
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    write(dir, name, &r.out)
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn analyze_b2() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = constructed(dir.path(), "b2.sg", &["b2"]);
    let r = semilab(&["analyze", s(&b2), "--json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let report: AnalysisReport = serde_json::from_str(&r.out).unwrap();
    assert_eq!(report.schema, 1);
    assert!(report.s_indecomposable.graph);
    assert_eq!(report.max_subsemilattice.size, 3);
    assert!(report.b2_combinatorial.definition && report.b2_combinatorial.principal_factors);
    assert_eq!(report.blocks, vec![1, 2]);
    // the report round-trips
    let again: AnalysisReport =
        serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
    assert_eq!(again, report);

    let text = semilab(&["analyze", s(&b2)]);
    assert!(text.out.contains("s-indecomposable: true"));
    assert!(text.out.contains("max subsemilattice: 3"));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let t = constructed(dir.path(), "tf.sg", &["munn", "F"]);
    let first = semilab(&["analyze", s(&t), "--json"]);
    let second = semilab(&["analyze", s(&t), "--json"]);
    assert_eq!(first.out, second.out);
    assert_eq!(
        semilab(&["enumerate", "--order", "3"]).out,
        semilab(&["enumerate", "--order", "3"]).out
    );
}

#[test]
fn iso_of_munn_u_and_chain_times_b2() {
    let dir = tempfile::tempdir().unwrap();
    let tu = constructed(dir.path(), "tu.sg", &["munn", "U"]);
    let b2 = constructed(dir.path(), "b2.sg", &["b2"]);
    let c3 = constructed(dir.path(), "c3.sg", &["semilattice", "C3"]);
    let c3b = constructed(dir.path(), "c3b.sg", &["times0", s(&c3), s(&b2)]);
    let r = semilab(&["iso", s(&tu), s(&c3b)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("isomorphic\n"));
    assert_eq!(r.out.lines().count(), 10);

    let tf = constructed(dir.path(), "tf.sg", &["munn", "F"]);
    let r = semilab(&["iso", s(&tf), s(&c3b)]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.out.starts_with("not isomorphic"));
}

#[test]
fn broken_table_is_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "broken.sg", "2\n0 1\n0 0\n");
    let r = semilab(&["validate", s(&p)]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("broken.sg"));
    assert!(r.err.contains("(1*0)*1"));

    let missing = semilab(&["analyze", "/nonexistent/x.sg"]);
    assert_eq!(missing.code, EXIT_INPUT);
    assert!(missing.err.contains("/nonexistent/x.sg"));

    let short = write(dir.path(), "short.sg", "3\n0 0 0\n0 0 0\n");
    let r = semilab(&["validate", s(&short)]);
    assert_eq!(r.code, EXIT_INPUT);
    assert!(r.err.contains("short.sg"));
}

#[test]
fn usage_errors() {
    assert_eq!(semilab(&["bogus"]).code, EXIT_USAGE);
    assert_eq!(semilab(&[]).code, EXIT_USAGE);
    assert_eq!(semilab(&["enumerate", "--order", "x"]).code, EXIT_USAGE);
    assert_eq!(semilab(&["--help"]).code, EXIT_OK);
}

#[test]
fn constructions_revalidate() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = constructed(dir.path(), "b2.sg", &["b2"]);
    let c2 = write(dir.path(), "c2.sg", "2\n0 1\n1 0\n");
    let cases: Vec<Vec<&str>> = vec![
        vec!["brandt", "3"],
        vec!["chain", "4"],
        vec!["semilattice", "X"],
        vec!["rees", "1 1; 0 1"],
        vec!["times0", s(&b2), s(&b2)],
        vec!["adjoin-zero", s(&c2)],
        vec!["zprime", s(&b2)],
        vec!["embed", s(&c2)],
        vec!["munn", "X"],
    ];
    for (k, args) in cases.iter().enumerate() {
        let p = constructed(dir.path(), &format!("case{k}.sg"), args);
        let r = semilab(&["validate", s(&p)]);
        assert_eq!(r.code, EXIT_OK, "{args:?}: {}", r.err);
    }
    let embedded =
        sg::parse(&std::fs::read_to_string(dir.path().join("case7.sg")).unwrap()).unwrap();
    assert_eq!(embedded.size(), 4 * 2 + 1);

    let out = dir.path().join("out.sg");
    assert_eq!(semilab(&["construct", "b2", "-o", s(&out)]).code, EXIT_OK);
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        std::fs::read_to_string(&b2).unwrap()
    );

    assert_eq!(semilab(&["construct", "zprime", s(&c2)]).code, EXIT_INPUT);
    assert_eq!(semilab(&["construct", "rees", "1 0; 0 0"]).code, EXIT_INPUT);
}

#[test]
fn enumeration_output_parses() {
    let r = semilab(&["enumerate", "--order", "2"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(sg::parse_many(&r.out).unwrap().len(), 5);
    assert_eq!(
        semilab(&["enumerate", "--order", "3", "--count-only"]).out,
        "24\n"
    );
    assert_eq!(
        semilab(&[
            "enumerate",
            "--order",
            "3",
            "--filter",
            "zero",
            "--count-only"
        ])
        .out,
        "12\n"
    );
    assert_eq!(semilab(&["enumerate", "--order", "6"]).code, EXIT_INPUT);
}

#[test]
fn classify_order_nine() {
    let r = semilab(&["classify-b2c", "--order", "9"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let tables = sg::parse_many(&r.out).unwrap();
    assert_eq!(tables.len(), 3);
    assert!(r.out.contains("# classes: 3"));
    assert!(r.out.contains("Munn"));
    assert_eq!(semilab(&["classify-b2c", "--order", "7"]).code, EXIT_INPUT);
    let five = semilab(&["classify-b2c", "--order", "5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&five.out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn verify_prop8_reports() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = constructed(dir.path(), "b2.sg", &["b2"]);
    let r = semilab(&["verify-prop8", s(&b2), "--json"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    let v: serde_json::Value = serde_json::from_str(&r.out).unwrap();
    assert_eq!(v["blocks"], serde_json::json!([1, 2]));
    let chain = constructed(dir.path(), "chain.sg", &["chain", "2"]);
    assert_eq!(semilab(&["verify-prop8", s(&chain)]).code, EXIT_INPUT);
}

#[test]
fn algebra_subcommand() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = constructed(dir.path(), "b2.sg", &["b2"]);
    let r = semilab(&["algebra", s(&b2), "--contracted", "--blocks"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.err);
    assert!(r.out.contains("dim 4\n"));
    assert!(r.out.contains("block sizes [2]"));
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_semilab");
    let dir = tempfile::tempdir().unwrap();
    let broken = write(dir.path(), "broken.sg", "2\n0 1\n0 0\n");
    let status = Command::new(exe)
        .args(["validate", s(&broken)])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(EXIT_INPUT));
    let status = Command::new(exe).arg("nope").output().unwrap();
    assert_eq!(status.status.code(), Some(EXIT_USAGE));
    let ok = Command::new(exe)
        .args(["construct", "b2"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8(ok.stdout)
        .unwrap()
        .starts_with("# B2\n5\n"));
}
