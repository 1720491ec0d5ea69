//! End-to-end command-line checks: subcommands composed as a pipeline
//! (in-process) and the installed binary driven through real pipes.

mod common;

use std::io::Write as _;
use std::process::{Command, Stdio};

use hamtri::planar_code::{read_stream, write_stream};
use hamtri::structure::separating_triangles;

fn run(args: &[&str], stdin: &[u8]) -> (i32, Vec<u8>, Vec<u8>) {
    let mut input = stdin;
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = hamtri::cli::run_with(args, &mut input, &mut out, &mut err);
    (code, out, err)
}

/// `gen | filter | check` equals checking a hand-filtered stream: the
/// filter subcommand is observationally the same as filtering in code.
#[test]
fn pipeline_composes_with_manual_filtering() {
    let (code, generated, _) = run(&["hamtri", "gen", "--n", "8"], b"");
    assert_eq!(code, 0);

    let (code, filtered, _) = run(
        &["hamtri", "filter", "--sep-triangles", "2"],
        &generated,
    );
    assert_eq!(code, 0);

    let by_hand: Vec<_> = read_stream(&generated)
        .unwrap()
        .into_iter()
        .filter(|g| separating_triangles(g).len() == 2)
        .collect();
    assert!(!by_hand.is_empty());
    assert_eq!(filtered, write_stream(&by_hand));

    let (code_a, out_a, err_a) = run(&["hamtri", "check", "--witness"], &filtered);
    let (code_b, out_b, err_b) =
        run(&["hamtri", "check", "--witness"], &write_stream(&by_hand));
    assert_eq!((code_a, &out_a, &err_a), (code_b, &out_b, &err_b));
    assert_eq!(code_a, 0);
}

/// Worker count never changes the bytes produced, including in audit mode
/// with witnesses on a stream that mixes verdicts.
#[test]
fn parallel_audit_output_is_byte_identical() {
    let (_, gen8, _) = run(&["hamtri", "gen", "--n", "8"], b"");
    let (_, ce, _) = run(&["hamtri", "construct", "--fixture", "ce10"], b"");
    let mut stream = gen8.clone();
    stream.extend_from_slice(&ce[hamtri::planar_code::HEADER.len()..]);

    let (code1, out1, err1) = run(
        &["hamtri", "check", "--mode", "audit", "--witness", "--jobs", "1"],
        &stream,
    );
    let (code4, out4, err4) = run(
        &["hamtri", "check", "--mode", "audit", "--witness", "--jobs", "4"],
        &stream,
    );
    assert_eq!((code1, &out1, &err1), (code4, &out4, &err4));
    assert_eq!(code1, 1, "the appended counterexample must set exit 1");
}

/// Standard flag handling: help and version succeed, unknown flags fail.
#[test]
fn help_version_and_bad_flags() {
    let (code, out, _) = run(&["hamtri", "--help"], b"");
    assert_eq!(code, 0);
    assert!(String::from_utf8_lossy(&out).contains("check"));
    let (code, _, _) = run(&["hamtri", "--version"], b"");
    assert_eq!(code, 0);
    let (code, _, err) = run(&["hamtri", "check", "--no-such-flag"], b"");
    assert_eq!(code, 2);
    assert!(!err.is_empty());
}

/// The real binary, through real pipes: construct a counterexample, check
/// it, and confirm the exit code and record; malformed usage exits 2.
#[test]
fn installed_binary_round_trip() {
    let bin = env!("CARGO_BIN_EXE_hamtri");

    let construct = Command::new(bin)
        .args(["construct", "--fixture", "ce10"])
        .output()
        .unwrap();
    assert!(construct.status.success());

    let mut check = Command::new(bin)
        .args(["check", "--mode", "naive"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    check
        .stdin
        .take()
        .unwrap()
        .write_all(&construct.stdout)
        .unwrap();
    let out = check.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("hamiltonian_connected=false"), "{text}");
    assert!(text.contains("refuted=10"), "{text}");

    let bad = Command::new(bin).args(["gen", "--n", "3"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
}

/// Analyze and decompose emit one record per input graph, in order.
#[test]
fn analyze_and_decompose_record_per_graph() {
    let (_, generated, _) = run(&["hamtri", "gen", "--n", "8"], b"");
    let graphs = read_stream(&generated).unwrap();
    for sub in ["analyze", "decompose"] {
        let (code, out, _) = run(&["hamtri", sub], &generated);
        assert_eq!(code, 0);
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), graphs.len());
        for (i, line) in lines.iter().enumerate() {
            assert!(line.starts_with(&format!("graph={i} ")), "{line}");
        }
    }
}
