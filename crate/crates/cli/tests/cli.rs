use std::io::Write;
use std::process::{Command, Output, Stdio};

use monoseq::parse::parse_batch;
use monoseq::report::ClassificationReport;

const SEQUENCE_A: &str = "x1*x2*x3\nx4*x5*x6\nx2*x3*x7\nx7*x8*x9\n";

fn monoseq(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monoseq"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_text_report() {
    let o = monoseq(&["classify"], SEQUENCE_A);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("s          true"), "{text}");
    assert!(text.contains("strong-s   false"), "{text}");
    assert!(text.contains("I_3 = (x1, x4*x5*x6)"), "{text}");
}

#[test]
fn classify_json_lines_round_trip_and_are_deterministic() {
    let input = format!("{SEQUENCE_A}---\nx1*x2\nx2*x3\nx2*x4\n");
    let a = monoseq(&["classify", "--json"], &input);
    let b = monoseq(&["classify", "--json"], &input);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<String> = stdout(&a).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2);
    for line in &lines {
        let report = ClassificationReport::from_json(line).unwrap();
        assert_eq!(serde_json::to_string(&report).unwrap(), *line);
        assert_eq!(report.schema, "monoseq.report/v1");
    }
    let second = ClassificationReport::from_json(&lines[1]).unwrap();
    assert_eq!(second.input.monomials, vec!["x1*x2", "x2*x3", "x2*x4"]);
    assert!(second.verdicts.strong_s_sequence.unwrap().value);
}

#[test]
fn classify_accepts_files_and_json_input() {
    let dir = std::env::temp_dir().join(format!("monoseq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.json");
    std::fs::write(&path, r#"{"vars": 3, "monomials": [[1,2,0],[0,1,1]]}"#).unwrap();
    let o = monoseq(&["classify", path.to_str().unwrap(), "--order", "deg"], "");
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("order = deg"), "{text}");
    assert!(text.contains("[f_1,f_2] != [f_1,f_2^2]"), "{text}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    assert_eq!(monoseq(&["classify"], "1\n").status.code(), Some(1));
    assert_eq!(monoseq(&["classify"], "x1 + x2\n").status.code(), Some(1));
    assert_eq!(monoseq(&["classify", "/nonexistent/file"], "").status.code(), Some(1));
    let o = monoseq(&["classify", "--max-pairs", "1"], SEQUENCE_A);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("limit"));
    assert_eq!(monoseq(&["gb-dump", "--max-pairs", "1"], SEQUENCE_A).status.code(), Some(2));
    assert_eq!(monoseq(&["audit", "--suite", "bogus"], "").status.code(), Some(1));
}

#[test]
fn fast_mode_tags_theorem() {
    let o = monoseq(&["classify", "--no-oracles", "--json"], SEQUENCE_A);
    let r = ClassificationReport::from_json(stdout(&o).trim()).unwrap();
    assert!(!r.oracles);
    assert!(r.groebner.is_none());
    assert_eq!(format!("{:?}", r.verdicts.d_sequence.method), "Theorem");
}

#[test]
fn random_is_seeded_and_parseable() {
    let args = ["random", "--seed", "42", "--count", "10", "--n", "3", "--m", "3", "--max-exp", "2"];
    let a = monoseq(&args, "");
    assert_eq!(a.stdout, monoseq(&args, "").stdout);
    let seqs = parse_batch(&stdout(&a)).unwrap();
    assert_eq!(seqs.len(), 10);
    let sf = monoseq(&["random", "--count", "5", "--squarefree", "--json"], "");
    let seqs = parse_batch(&stdout(&sf)).unwrap();
    assert!(seqs.iter().all(|s| s.is_squarefree()));
}

#[test]
fn gb_dump_prints_basis() {
    let o = monoseq(&["gb-dump"], "x1\nx2\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x1*y2 - x2*y1\n");
}

#[test]
fn audit_single_suite() {
    let o = monoseq(&["audit", "--suite", "necessity-n4", "--seed", "7", "--count", "50"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("necessity-n4       ok"), "{}", stdout(&o));
}
