use std::io::Write;
use std::process::{Command, Output, Stdio};

fn symfunc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_symfunc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

#[test]
fn macdonald_e_n() {
    let out = symfunc(&["macdonald", "P", "--partition", "1,1", "--out", "json"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "{\"basis\":\"m\",\"terms\":[{\"partition\":[1,1],\"coeff\":\"1\"}]}\n");
}

#[test]
fn verify_kawanaka() {
    let out = symfunc(&["verify", "kawanaka", "--vars", "2", "--deg", "4"], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("{\"identity\":\"kawanaka\",\"n\":2,\"deg\":4,\"equal\":true,"));
}

#[test]
fn signed_stirling() {
    let out = symfunc(&["umbral-matrix", "--series", "exp-1", "--deg", "5", "--extract", "stirling", "--out", "table"], "");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().next().unwrap(), "1  -1   2  -6   24");
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn convert_reads_stdin() {
    let out = symfunc(&["convert", "--to", "s"], "{\"basis\":\"h\",\"terms\":[{\"partition\":[1,1],\"coeff\":\"1\"}]}");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"basis\":\"s\",\"terms\":[{\"partition\":[2],\"coeff\":\"1\"},{\"partition\":[1,1],\"coeff\":\"1\"}]}\n"
    );
}

#[test]
fn usage_errors() {
    let out = symfunc(&["macdonald", "P", "--partition", "1,2"], "");
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("not weakly decreasing"));
    assert_eq!(symfunc(&["convert", "--to", "s"], "{not json").status.code(), Some(2));
    assert_eq!(symfunc(&[], "").status.code(), Some(2));
}
