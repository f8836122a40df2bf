//! Every case under `corpus/` reaches its recorded verdict, through the
//! library and through the command line.

use std::path::Path;

use rectify::cli::run_args;
use rectify::corpus::load_dir;
use rectify::hyperplane::AnalysisOptions;

fn corpus_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

#[test]
fn corpus_cases_reach_their_verdicts() {
    let cases = load_dir(&corpus_dir()).unwrap();
    assert!(cases.len() >= 13, "{} cases", cases.len());
    let mut wrong = Vec::new();
    for case in &cases {
        let r = case.run(AnalysisOptions::default()).unwrap();
        if r.verdict.name() != case.expected_verdict {
            wrong.push(format!(
                "{}: expected {}, got {:?}",
                case.name(),
                case.expected_verdict,
                r.verdict
            ));
        }
    }
    assert!(wrong.is_empty(), "{}", wrong.join("\n"));
}

#[test]
fn corpus_exit_codes_match_verdicts() {
    for case in load_dir(&corpus_dir()).unwrap() {
        let out = run_args(["rectify", "analyze", &case.a, &case.f, &case.field]);
        let expected = match case.expected_verdict.as_str() {
            "Rectifiable" => 0,
            "NotRectifiable" => 1,
            "Inconclusive" => 2,
            _ => 3,
        };
        assert_eq!(out.code, expected, "{}: {}", case.name(), out.stderr);
    }
}

#[test]
fn malformed_cases_are_reported() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.toml"), "field = \"Q\"\na = \"X\"\n").unwrap();
    assert!(load_dir(dir.path()).is_err());
}
