use std::path::PathBuf;

use squier::cli::{run, Outcome};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).display().to_string()
}

fn squier(args: &[&str]) -> Outcome {
    run(std::iter::once("squier").chain(args.iter().copied()))
}

#[test]
fn branchings_of_k1() {
    let out = squier(&["branchings", &fixture("k1.cp")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert_eq!(out.stdout, "critical branchings: 1\na a a: [1 | r | a] [a | r | 1]\n");
}

#[test]
fn branchings_of_k2_and_xx() {
    let out = squier(&["branchings", &fixture("k2.cp")]);
    assert_eq!(out.stdout, "critical branchings: 0\n");
    let out = squier(&["branchings", &fixture("xx.cp")]);
    assert!(out.stdout.starts_with("critical branchings: 1\nx x x:"), "{}", out.stdout);
}

#[test]
fn normalize_k2() {
    let out = squier(&["normalize", &fixture("k2.cp"), "b b a a"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines[0], "a a b b");
    assert_eq!(lines[1], "steps: 4");
    assert!(lines[2].starts_with("path: b b a a ; "));

    let right = squier(&["normalize", &fixture("k2.cp"), "b b a a", "--strategy", "rightmost"]);
    assert_eq!(right.stdout.lines().next(), Some("a a b b"));
}

#[test]
fn normalize_errors() {
    let out = squier(&["normalize", &fixture("k2.cp"), "b b a a", "--fuel", "2"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("fuel exhausted"), "{}", out.stderr);

    let out = squier(&["normalize", &fixture("k2.cp"), "b c"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("unknown generator `c`"), "{}", out.stderr);

    let out = squier(&["normalize", "/nonexistent.cp", "a"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.starts_with("error: cannot read"), "{}", out.stderr);
}

#[test]
fn complete_then_fill_then_check() {
    let dir = tempfile::tempdir().unwrap();
    let k1c = dir.path().join("k1c.cp");
    let cert = dir.path().join("c.cell");
    let k1c_s = k1c.display().to_string();
    let cert_s = cert.display().to_string();

    let out = squier(&["complete", &fixture("k1.cp"), "-o", &k1c_s]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("squares added: 1\nA0: "), "{}", out.stdout);

    let out = squier(&["fill-shell", &k1c_s, "--shell", &fixture("k1.shell"), "-o", &cert_s]);
    assert_eq!(out.code, 0, "{}", out.stderr);

    let out = squier(&["check", &k1c_s, "--shell", &fixture("k1.shell"), "--cert", &cert_s]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "ok\n"), "{}", out.stderr);

    // flip the top of the target shell
    let flipped = dir.path().join("flipped.shell");
    let flipped_top = "top=a a ; - 1 | r | a ; + a | r | 1\nleft=a a a ; 1 | r | a\nright=a a a ; a | r | 1\nbottom=a a\n";
    std::fs::write(&flipped, flipped_top).unwrap();
    let out =
        squier(&["check", &k1c_s, "--shell", &flipped.display().to_string(), "--cert", &cert_s]);
    assert_eq!(out.code, 1);
    assert_eq!(out.stderr, "error: face mismatch: top\n");
}

#[test]
fn fill_shell_needs_completion() {
    let out = squier(&["fill-shell", &fixture("k1.cp"), "--shell", &fixture("k1.shell")]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("incomplete Σ₂"), "{}", out.stderr);
}

#[test]
fn fill_shell_prints_certificate_without_output_file() {
    let out = squier(&["fill-shell", &fixture("k2.cp"), "--shell", &fixture("k2.shell")]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("shell top=b b a a ; "));
    assert_eq!(out.stdout.lines().count(), 2);
}

#[test]
fn fill_shell_rejects_open_corners() {
    let dir = tempfile::tempdir().unwrap();
    let shell = dir.path().join("open.shell");
    std::fs::write(&shell, "top=a a ; 1 | s | 1\nleft=b a\nright=a b\nbottom=a a\n").unwrap();
    let out = squier(&["fill-shell", &fixture("k2.cp"), "--shell", &shell.display().to_string()]);
    assert_eq!(out.code, 2, "{}", out.stderr);
    let shell_text = "top=b a ; 1 | s | 1\nleft=b a\nright=a b\nbottom=a b\n";
    std::fs::write(&shell, shell_text).unwrap();
    let out = squier(&["fill-shell", &fixture("k2.cp"), "--shell", &shell.display().to_string()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("shell corner mismatch"), "{}", out.stderr);
}

#[test]
fn complete_reports_termination_failure() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("grow.cp");
    std::fs::write(&file, "[generators]\na\n[rules]\ng: a -> a a\n").unwrap();
    let out = squier(&["complete", &file.display().to_string()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("termination"), "{}", out.stderr);
}

#[test]
fn parse_errors_have_positions() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.cp");
    std::fs::write(&file, "[generators]\na\n[rules]\nr: 1 -> a\n").unwrap();
    let out = squier(&["info", &file.display().to_string()]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("line 4: r: empty left-hand side"), "{}", out.stderr);
}

#[test]
fn info_summary() {
    let out = squier(&["info", &fixture("k1.cp")]);
    assert_eq!(out.code, 0);
    assert_eq!(
        out.stdout,
        "generators: 1 (a)\nrules: 1\nsquares: 0\nregime: 2\ncritical branchings: 1\n\
         squares cover all critical branchings: no\nshortlex termination (a): yes\n"
    );
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(squier(&["frobnicate"]).code, 2);
    assert_eq!(squier(&["normalize"]).code, 2);
    let help = squier(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("fill-shell"));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_squier");
    let status = std::process::Command::new(bin)
        .args(["normalize", &fixture("k2.cp"), "b b a a", "--fuel", "1"])
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(3));
    let ok = std::process::Command::new(bin).args(["info", &fixture("xx.cp")]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("rules: 1"));
}
