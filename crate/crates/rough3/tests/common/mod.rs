use std::process::Command;

pub const FIXTURE: &str = "tests/fixtures/fixture.csv";

pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Runs the built binary from the crate root so fixture paths stay relative.
pub fn rough3(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_rough3"))
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exited normally"),
    }
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/fixtures/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Every command whose stdout is pinned by a golden file.
pub const GOLDEN_RUNS: &[(&str, &[&str])] = &[
    ("partition.jsonl", &["partition", "--table", FIXTURE]),
    ("approx.jsonl", &["approx", "--table", FIXTURE, "--set", "1,3"]),
    ("membership.jsonl", &["membership", "--table", FIXTURE, "--set", "1,3"]),
    ("quotient.jsonl", &["quotient", "--table", FIXTURE]),
    ("verify_all.jsonl", &["verify", "--table", FIXTURE, "--suite", "all"]),
    (
        "represent_three_chain.jsonl",
        &["represent", "--algebra", "tests/fixtures/three_chain.json"],
    ),
    (
        "verify_corrupt.jsonl",
        &[
            "verify",
            "--algebra",
            "tests/fixtures/three_chain_corrupt.json",
            "--suite",
            "lukasiewicz",
        ],
    ),
];
