use std::path::PathBuf;
use std::process::Command;

use symdiag_cli::solve;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn solve_bytes(input: &[u8]) -> Vec<u8> {
    let mut out = Vec::new();
    let summary = solve(input, &mut out).unwrap();
    assert_eq!((summary.solved, summary.failed), (12, 0));
    out
}

#[test]
fn library_output_matches_golden_file() {
    let input = std::fs::read(data("corpus.jsonl")).unwrap();
    let golden = std::fs::read(data("corpus.golden.jsonl")).unwrap();
    let first = solve_bytes(&input);
    assert_eq!(first, solve_bytes(&input));
    assert!(
        first == golden,
        "output differs from corpus.golden.jsonl:\n{}",
        String::from_utf8_lossy(&first)
    );
}

#[test]
fn binary_output_matches_golden_file() {
    let dir = tempfile::tempdir().unwrap();
    let golden = std::fs::read(data("corpus.golden.jsonl")).unwrap();
    for run in 0..2 {
        let out = dir.path().join(format!("run{run}.jsonl"));
        let status = Command::new(env!("CARGO_BIN_EXE_symdiag"))
            .args(["solve", "--input"])
            .arg(data("corpus.jsonl"))
            .arg("--output")
            .arg(&out)
            .status()
            .unwrap();
        assert!(status.success());
        assert!(std::fs::read(&out).unwrap() == golden, "run {run}");
    }
}

#[test]
fn golden_records_are_exact_decompositions() {
    let golden = std::fs::read_to_string(data("corpus.golden.jsonl")).unwrap();
    let branches: Vec<String> = golden
        .lines()
        .map(|l| {
            let v: serde_json::Value = serde_json::from_str(l).unwrap();
            assert!(
                v["residuals"]["recon_rel"].as_f64().unwrap() <= 1e-14,
                "{l}"
            );
            v["branch"].as_str().unwrap().to_owned()
        })
        .collect();
    for b in [
        "TripleRoot",
        "DoubleRoot",
        "Generic",
        "AlreadyDiagonal2D",
        "Planar",
    ] {
        assert!(branches.iter().any(|x| x == b), "corpus lacks {b}");
    }
}
