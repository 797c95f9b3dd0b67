use std::io::Write;
use std::process::{Command, Output, Stdio};

fn quiver(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quiver"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    if let Some(text) = stdin {
        input.write_all(text.as_bytes()).unwrap();
    }
    drop(input);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn stanley() {
    let o = quiver(&["stanley", "2431"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s[3,1]\n");
    let o = quiver(&["--json", "stanley", "2,1,4,3"], None);
    assert_eq!(json(&o), serde_json::json!({"[2]": 1, "[1,1]": 1}));
}

#[test]
fn schubert() {
    let o = quiver(&["schubert", "213", "--double", "--check"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "s[1](x/y) - x2 + y2\n= x1 - y1\ndivided differences: match\n");
    let o = quiver(&["schubert", "321"], None);
    assert!(stdout(&o).ends_with("= x1^2*x2\n"), "{}", stdout(&o));
}

#[test]
fn coefficients() {
    let o = quiver(&["--json", "coeffs", "2431"], None);
    assert_eq!(o.status.code(), Some(0));
    let rows = json(&o);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["coeff"] == 1));
    assert!(rows.iter().any(|r| r["lambda"] == serde_json::json!([2, 1, 1])));
}

#[test]
fn quiver_file_from_stdin() {
    let o = quiver(&["quiver", "-"], Some("1\n5 4\n2\n"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1  s[3,3]\n");
    let o = quiver(&["--json", "quiver", "-"], Some("1\n5 4\n2\n"));
    let v = json(&o);
    assert_eq!(v["codim"], 6);
    assert_eq!(v["terms"], serde_json::json!([{"coeff": 1, "shapes": [[3, 3]]}]));
}

#[test]
fn quiver_file_on_disk() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("r2431.txt");
    std::fs::write(&path, "5\n1 2 3 3 2 1\n1 2 2 2 1\n1 1 1 1\n0 1 1\n0 1\n0\n").unwrap();
    let o = quiver(&["--json", "quiver", path.to_str().unwrap()], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["terms"].as_array().unwrap().len(), 10);
}

#[test]
fn reduced_words() {
    assert_eq!(stdout(&quiver(&["reduced-words", "4321"], None)), "16\n");
    assert_eq!(stdout(&quiver(&["reduced-words", "321", "--list"], None)), "1 2 1\n2 1 2\n");
}

#[test]
fn factor_sequences() {
    let o = quiver(&["factorseq", "2431", "--check"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("counts match\n"));
    let o = quiver(&["--json", "factorseq", "21", "--check"], None);
    let v = json(&o);
    assert_eq!(v["holds"], true);
    assert_eq!(v["report"]["[[1]]"]["factor_count"], 1);
}

#[test]
fn verify_suite() {
    let o = quiver(&["verify", "--suite", "s3"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("s3: 144 checks, 0 failed\n"));
}

#[test]
fn input_errors_exit_with_two() {
    for (args, stdin) in [
        (&["stanley", "22"][..], None),
        (&["quiver", "-"][..], Some("1\n2 2\n3\n")),
        (&["quiver", "-"][..], Some("not a number\n")),
        (&["quiver", "/nonexistent/file"][..], None),
        (&["verify", "--suite", "s9"][..], None),
        (&["frobnicate"][..], None),
    ] {
        let o = quiver(args, stdin);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
        assert!(!o.stderr.is_empty());
    }
    let o = quiver(&["stanley", "22"], None);
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error: "));
}

#[test]
fn help_exits_cleanly() {
    let o = quiver(&["--help"], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("reduced-words"));
}
