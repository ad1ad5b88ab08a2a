use std::process::Command;

#[allow(dead_code)]
pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn pcores(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_pcores"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

pub fn golden(name: &str) -> String {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}

/// Golden CLI invocations: arguments, golden file, expected exit code.
pub const GOLDEN_CASES: &[(&[&str], &str, i32)] = &[
    (&["core", "3,1", "--ell", "2"], "core_3_1_ell2.txt", 0),
    (&["core", "4,2,1", "--ell", "3"], "core_4_2_1_ell3.txt", 0),
    (&["core", "-", "--ell", "5"], "core_empty_ell5.txt", 0),
    (
        &["barcore", "3,2,1", "--ell", "3"],
        "barcore_3_2_1_ell3.txt",
        0,
    ),
    (
        &["barcore", "3,2,1", "--ell", "5"],
        "barcore_3_2_1_ell5.txt",
        0,
    ),
    (
        &[
            "reconstruct",
            "--ell",
            "2",
            "--core",
            "-",
            "--component",
            "2",
            "--component",
            "-",
        ],
        "reconstruct_ell2.txt",
        0,
    ),
    (
        &["enumerate", "cores", "--n", "6", "--t", "2"],
        "enumerate_cores_6_2.txt",
        0,
    ),
    (
        &["enumerate", "partitions", "--n", "4", "--count"],
        "enumerate_partitions_4_count.txt",
        0,
    ),
    (
        &["enumerate", "cores", "--n", "4", "--t", "2", "--count"],
        "enumerate_cores_4_2_count.txt",
        0,
    ),
    (
        &[
            "verify",
            "corollary1",
            "--s",
            "5",
            "--t",
            "3",
            "--amax",
            "2",
            "--no-timing",
        ],
        "verify_corollary1_5_3.json",
        0,
    ),
];
