use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

const BIN: &str = env!("CARGO_BIN_EXE_hamming");

fn run(args: &[&str], stdin: &[u8]) -> Output {
    let mut child = Command::new(BIN)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hamming");
    child.stdin.take().unwrap().write_all(stdin).unwrap();
    child.wait_with_output().unwrap()
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn data_file(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}

fn core_golden() -> Vec<u8> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/tests/data/b0_m4.hmng");
    std::fs::read(path).unwrap()
}

fn encode(payload: &[u8], m: &str) -> Vec<u8> {
    let out = run(&["encode", "--m", m], payload);
    assert_eq!(status(&out), 0, "{}", stderr(&out));
    out.stdout
}

#[test]
fn encode_matches_golden_stream() {
    assert_eq!(encode(&[0xB0], "4"), core_golden());
    let out = run(&["encode", "--m", "4", "--k", "3"], &[0xB0]);
    assert_eq!(out.stdout, core_golden());
}

#[test]
fn encode_empty_input_is_header_only() {
    let coded = encode(&[], "4");
    assert_eq!(coded.len(), 16);
    assert_eq!(&coded[..4], b"HMNG");
    assert_eq!(&coded[8..], &[0u8; 8]);
}

#[test]
fn encode_parameter_errors_exit_2() {
    assert_eq!(status(&run(&["encode", "--m", "0"], &[])), 2);
    assert_eq!(status(&run(&["encode", "--k", "3"], &[])), 2);
    assert_eq!(status(&run(&["encode", "--m", "5", "--k", "3"], &[])), 2);
    assert_eq!(status(&run(&["encode"], &[])), 2);
}

#[test]
fn files_and_io_failures() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.bin");
    let coded = dir.path().join("out.hmng");
    std::fs::write(&input, [0xB0]).unwrap();
    let out = run(
        &[
            "encode",
            "--m",
            "4",
            input.to_str().unwrap(),
            "-o",
            coded.to_str().unwrap(),
        ],
        &[],
    );
    assert_eq!(status(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read(&coded).unwrap(), core_golden());

    let missing = dir.path().join("missing.bin");
    let out = run(&["encode", "--m", "4", missing.to_str().unwrap()], &[]);
    assert_eq!(status(&out), 1);
    let out = run(&["decode", missing.to_str().unwrap()], &[]);
    assert_eq!(status(&out), 1);
}

#[test]
fn corrupt_flip_targets_one_block_bit() {
    let out = run(&["corrupt", "--flip", "0:5"], &core_golden());
    assert_eq!(status(&out), 0);
    let mut expected = core_golden();
    // block 0 becomes 0110111, block 1 stays 0000000
    expected[16] = 0b0110_1110;
    assert_eq!(out.stdout, expected);
}

#[test]
fn corrupt_flip_out_of_range_exits_2() {
    assert_eq!(
        status(&run(&["corrupt", "--flip", "2:1"], &core_golden())),
        2
    );
    assert_eq!(
        status(&run(&["corrupt", "--flip", "0:8"], &core_golden())),
        2
    );
    assert_eq!(
        status(&run(&["corrupt", "--flip", "0:0"], &core_golden())),
        2
    );
    assert_eq!(
        status(&run(&["corrupt", "--flip", "zero"], &core_golden())),
        2
    );
    assert_eq!(status(&run(&["corrupt"], &core_golden())), 2);
    assert_eq!(
        status(&run(&["corrupt", "--bsc", "1.5"], &core_golden())),
        2
    );
    assert_eq!(
        status(&run(
            &["corrupt", "--bsc", "0.1", "--flip", "0:1"],
            &core_golden()
        )),
        2
    );
}

#[test]
fn corrupt_bsc_is_seeded() {
    let out = run(&["corrupt", "--bsc", "0"], &core_golden());
    assert_eq!(out.stdout, core_golden());

    let payload: Vec<u8> = (0..=255).collect();
    let coded = encode(&payload, "4");
    let a = run(&["corrupt", "--bsc", "0.01", "--seed", "7"], &coded);
    let b = run(&["corrupt", "--bsc", "0.01", "--seed", "7"], &coded);
    assert_eq!(status(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, coded);
    assert_eq!(a.stdout[..16], coded[..16]);
    let c = run(&["corrupt", "--bsc", "0.01", "--seed", "8"], &coded);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn decode_reports_corrections() {
    let corrupted = run(&["corrupt", "--flip", "0:5"], &core_golden()).stdout;
    let out = run(&["decode", "--report"], &corrupted);
    assert_eq!(status(&out), 0);
    assert_eq!(out.stdout, [0xB0]);
    let report = stderr(&out);
    assert!(
        report.contains("block 0: corrected position 5\n"),
        "{report}"
    );
    assert!(report.contains("block 1: clean\n"));
    assert!(report.contains("1 corrected"));

    let out = run(&["decode", "--report"], &core_golden());
    assert_eq!(status(&out), 0);
    assert_eq!(out.stdout, [0xB0]);
    assert!(stderr(&out).contains("0 corrected"));

    // without --report nothing goes to stderr and stdout carries only payload
    let out = run(&["decode"], &corrupted);
    assert_eq!(out.stdout, [0xB0]);
    assert!(out.stderr.is_empty());
}

#[test]
fn decode_uncorrectable_exits_3() {
    // (6, 3) shortened code; positions 1 and 6 of one block give checking number 7
    let coded = encode(&[0x00], "3");
    let bad = run(&["corrupt", "--flip", "1:1", "--flip", "1:6"], &coded).stdout;
    let out = run(&["decode", "--report"], &bad);
    assert_eq!(status(&out), 3);
    assert_eq!(out.stdout.len(), 1);
    assert!(stderr(&out).contains("block 1: uncorrectable (checking number 7)"));
}

#[test]
fn decode_format_errors_exit_2() {
    let mut bad = core_golden();
    bad[0] = b'X';
    assert_eq!(status(&run(&["decode"], &bad)), 2);
    assert_eq!(status(&run(&["decode"], &core_golden()[..17])), 2);
    assert_eq!(status(&run(&["decode"], b"")), 2);
}

#[test]
fn pipeline_survives_every_single_flip() {
    let payload = b"Hi!";
    for m in ["4", "3", "11"] {
        let coded = encode(payload, m);
        let n: usize = match m {
            "4" => 7,
            "3" => 6,
            _ => 15,
        };
        let blocks = (payload.len() * 8).div_ceil(m.parse::<usize>().unwrap());
        for b in 0..blocks {
            for p in 1..=n {
                let flip = format!("{b}:{p}");
                let corrupted = run(&["corrupt", "--flip", &flip], &coded);
                assert_eq!(status(&corrupted), 0);
                let out = run(&["decode"], &corrupted.stdout);
                assert_eq!(status(&out), 0);
                assert_eq!(out.stdout, payload, "m={m} flip {flip}");
            }
        }
    }
}

#[test]
fn analyze_reports() {
    let out = run(&["analyze", "--m", "4"], &[]);
    assert_eq!(status(&out), 0);
    let text = stdout(&out);
    for line in [
        "rate=4/7",
        "rate_decimal=0.571429",
        "min_distance=3",
        "weight_distribution=0:1,3:7,4:7,7:1",
        "correction_coverage=1.000000",
        "column_permutation=3,5,6,7,1,2,4",
    ] {
        assert!(text.lines().any(|l| l == line), "missing {line}\n{text}");
    }
    assert!(text.contains("[parity_check_interleaved]\n1010101\n0110011\n0001111\n"));
    assert!(text.contains("[parity_check_systematic]\n1101100\n1011010\n0111001\n"));

    let text = stdout(&run(&["analyze", "--m", "1"], &[]));
    assert!(text.contains("rate=1/3\nrate_decimal=0.333333\n"));
    assert!(text.contains("min_distance=3\n"));

    let text = stdout(&run(&["analyze", "--m", "11"], &[]));
    assert!(text.contains("rate=11/15\nrate_decimal=0.733333\n"));
    assert!(text.contains("min_distance=3\n"));
    assert!(text.contains("correction_cases=30720\ncorrection_corrected=30720\n"));
}

#[test]
fn analyze_guard_and_force() {
    let out = run(&["analyze", "--m", "17"], &[]);
    assert_eq!(status(&out), 2);
    assert!(stderr(&out).contains("--force"));
    let out = run(&["analyze", "--m", "17", "--force"], &[]);
    assert_eq!(status(&out), 0);
    assert!(stdout(&out).contains("min_distance=3\n"));
}

#[test]
fn trace_golden_files() {
    let out = run(&["trace", "--m", "4", "--word", "0110111"], &[]);
    assert_eq!(status(&out), 0);
    let golden = std::fs::read_to_string(data_file("trace_m4_0110111.txt")).unwrap();
    assert_eq!(stdout(&out), golden);
    assert!(golden.ends_with("checking number 101₂ = 5; flip position 5\n"));

    let out = run(&["trace", "--m", "4", "--word", "0110011"], &[]);
    let golden = std::fs::read_to_string(data_file("trace_m4_0110011.txt")).unwrap();
    assert_eq!(stdout(&out), golden);
    assert!(golden.ends_with("checking number 0; no error\n"));
}

#[test]
fn trace_rejects_bad_words() {
    assert_eq!(
        status(&run(&["trace", "--m", "4", "--word", "011"], &[])),
        2
    );
    assert_eq!(
        status(&run(&["trace", "--m", "4", "--word", "01100a1"], &[])),
        2
    );
}
