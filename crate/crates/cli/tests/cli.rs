use std::path::PathBuf;
use std::process::Command as Process;

use clap::Parser;
use pomset_codes_cli::{execute, Cli, ExperimentSpec, EXIT_BUDGET, EXIT_INVALID, EXIT_MISMATCH, EXIT_OK};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn cli(args: &[&str]) -> Cli {
    Cli::try_parse_from(std::iter::once("pomset-codes").chain(args.iter().copied())).unwrap()
}

fn run_on(args: &[&str], spec: &str) -> (u8, String) {
    let o = execute(&cli(args), spec);
    (o.exit_code, o.report)
}

fn binary(args: &[&str]) -> (i32, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_pomset-codes")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn verify_fixtures_through_the_binary() {
    let cases = [
        ("z4_mixed_blocks.json", vec![], "x^4 + x^2y^2 + 8xy^3 + 6y^4", "theorem"),
        ("z5_mixed_blocks.json", vec![], "x^4 + 2x^3y + 2x^2y^2 + 10xy^3 + 10y^4", "theorem"),
        ("z5_dimension_two.json", vec!["--method", "corollary"], "x^4 + 8xy^3 + 16y^4", "corollary"),
        ("ordinal_sum.json", vec![], "x^3 + 2x^2y + 6y^3", "sum"),
    ];
    for (file, extra, enumerator, method) in cases {
        let path = fixture(file);
        let mut args = vec!["verify", "--spec", path.to_str().unwrap()];
        args.extend(extra);
        let (code, report) = binary(&args);
        assert_eq!(code, 0, "{file}: {report}");
        assert!(report.contains(&format!("predicted dual enumerator: {enumerator}\n")), "{report}");
        assert!(report.contains(&format!("method: {method}\n")), "{report}");
        assert!(report.ends_with("RESULT: equal\n"));
    }
}

#[test]
fn every_method_verifies_where_it_applies() {
    let spec = std::fs::read_to_string(fixture("z5_dimension_two.json")).unwrap();
    for method in ["auto", "theorem", "corollary", "sum", "fourier"] {
        let (code, report) = run_on(&["verify", "--spec", "-", "--method", method], &spec);
        assert_eq!(code, EXIT_OK, "{method}: {report}");
    }
    let antichain = spec.replace("\"chain\"", "\"antichain\"");
    let (code, report) = run_on(&["verify", "--spec", "-", "--method", "theorem"], &antichain);
    assert_eq!(code, EXIT_INVALID, "{report}");
}

#[test]
fn enumerate_zero_code() {
    let spec = r#"{"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}, "words": [[0, 0]]}"#;
    let (code, report) = run_on(&["enumerate", "--spec", "-"], spec);
    assert_eq!(code, EXIT_OK);
    assert!(report.contains("enumerator coefficients: A = [1, 0, 0, 0, 0]\n"), "{report}");
}

#[test]
fn dual_lists_words() {
    let spec = std::fs::read_to_string(fixture("z4_mixed_blocks.json")).unwrap();
    let (code, report) = run_on(&["dual", "--spec", "-"], &spec);
    assert_eq!(code, EXIT_OK);
    assert!(report.contains("dual size: 16\n"));
    assert!(report.contains("dual words: {000, 002, 021, 023, 111, 113, 130, 132, 201, 203, 220, 222, 310, 312, 331, 333}\n"));
    assert!(report.contains("dual enumerator: x^4 + x^2y^2 + 8xy^3 + 6y^4\n"));
}

#[test]
fn probe_reports_witness_as_mismatch() {
    let path = fixture("probe_witness.json");
    let (code, report) = binary(&["probe", "--spec", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_MISMATCH as i32, "{report}");
    assert!(report.contains("witness: <"));
    assert!(report.ends_with("RESULT: mismatch\n"));
}

#[test]
fn output_is_deterministic() {
    let spec = std::fs::read_to_string(fixture("ordinal_sum.json")).unwrap();
    for args in [
        vec!["probe", "--spec", "-", "--trials", "50", "--seed", "9"],
        vec!["verify", "--spec", "-"],
        vec!["dual", "--spec", "-"],
    ] {
        assert_eq!(run_on(&args, &spec), run_on(&args, &spec));
    }
}

#[test]
fn dumped_spec_round_trips() {
    for file in ["z4_mixed_blocks.json", "z5_dimension_two.json", "ordinal_sum.json", "probe_witness.json"] {
        let spec = std::fs::read_to_string(fixture(file)).unwrap();
        let (code, dumped) = run_on(&["verify", "--spec", "-", "--seed", "4", "--dump-spec"], &spec);
        assert_eq!(code, EXIT_OK);
        let json = dumped.strip_suffix("RESULT: equal\n").unwrap();
        let parsed = ExperimentSpec::parse(json).unwrap();
        let mut original = ExperimentSpec::parse(&spec).unwrap();
        original.options.seed = Some(4);
        assert_eq!(parsed, original);
        assert_eq!(parsed.to_json() + "\n", json);
    }
}

#[test]
fn invalid_specs_exit_with_two() {
    let bad = [
        "not json",
        r#"{"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}}"#,
        r#"{"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}, "words": [[1, 0]]}"#,
        r#"{"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain", "points": 3}, "words": [[0, 0]]}"#,
        r#"{"m": 4, "blocks": [1, 1], "pomset": {"kind": "chain"}, "generators": [[1, 2, 3]]}"#,
        r#"{"m": 4, "blocks": [2], "pomset": {"kind": "chain"}, "generators": [[1, 1]], "extra": 1}"#,
        r#"{"m": 1, "blocks": [1], "pomset": {"kind": "chain"}, "generators": [[0]]}"#,
    ];
    for spec in bad {
        let (code, report) = run_on(&["enumerate", "--spec", "-"], spec);
        assert_eq!(code, EXIT_INVALID, "{spec}: {report}");
        assert!(report.ends_with("RESULT: error\n"));
    }
    let z4 = r#"{"m": 4, "blocks": [2, 2], "pomset": {"kind": "chain"}, "generators": [[1, 0, 1, 1]]}"#;
    let (code, _) = run_on(&["verify", "--spec", "-", "--method", "corollary"], z4);
    assert_eq!(code, EXIT_INVALID);
    let (code, _) = binary(&["verify", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(code, EXIT_INVALID as i32);
}

#[test]
fn budget_exceeded_exits_with_three() {
    let spec = std::fs::read_to_string(fixture("z5_dimension_two.json")).unwrap();
    let (code, report) = run_on(&["dual", "--spec", "-", "--budget", "100"], &spec);
    assert_eq!(code, EXIT_BUDGET, "{report}");
    assert!(report.ends_with("RESULT: error\n"));
}

#[test]
fn non_splitting_code_falls_back_to_transform() {
    let spec = r#"{"m": 3, "blocks": [1, 1], "pomset": {"kind": "direct", "parts": [{"kind": "chain", "points": 1}, {"kind": "chain", "points": 1}]}, "generators": [[1, 1]]}"#;
    let (code, report) = run_on(&["verify", "--spec", "-"], spec);
    assert_eq!(code, EXIT_OK, "{report}");
    assert!(report.contains("falling back to fourier"));
    assert!(report.contains("method: fourier\n"));
}
