use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ehrhart"))
        .args(args)
        .env("EHRHART_SEED", "11")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    // The child may exit before reading stdin.
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const P2: &str = "2 3\n1 0\n0 1\n-1 -1\n";
const CENTERED: &str = "# id: t\n2 3\n-1 -1\n2 -1\n-1 2\n";
const PARALLELOGRAM: &str = "2 4\n3/2 1/4\n-3/2 -1/4\n3/2 5/4\n-3/2 -5/4\n";

#[test]
fn dual_and_volume() {
    let o = run(&["dual", "-"], P2);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "# id: p1\n2 3\n-1 -1\n-1 2\n2 -1\n");
    let o = run(&["volume", "-"], PARALLELOGRAM);
    assert_eq!(stdout(&o), "p1\t3\n");
    let o = run(&["barycenter", "-"], CENTERED);
    assert_eq!(stdout(&o), "t\t(0, 0)\n");
}

#[test]
fn lattice_points_of_dual() {
    let dual = stdout(&run(&["dual", "-"], PARALLELOGRAM));
    let o = run(&["lattice-points", "-"], &dual);
    assert_eq!(stdout(&o), "p1\t(-1, 2)\np1\t(0, 0)\np1\t(1, -2)\n");
    let o = run(&["lattice-points", "--strict", "-"], PARALLELOGRAM);
    assert_eq!(stdout(&o), "p1\t(0, 0)\n");
}

#[test]
fn check_reports_json() {
    let o = run(&["check", "ehrhart", "-"], CENTERED);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.contains(r#""status":"equality""#) && out.contains(r#""volume":"9/2""#),
        "{out}"
    );
    let o = run(
        &["check", "minkowski", "-"],
        "2 4\n-1 -1\n1 -1\n-1 1\n1 1\n",
    );
    assert!(stdout(&o).contains(r#""minkowski_status":"equality""#));
}

#[test]
fn grunbaum_halfspace() {
    let o = run(
        &["grunbaum", "--halfspace", "-1,0;-1", "-"],
        "2 3\n0 0\n3 0\n0 3\n",
    );
    let out = stdout(&o);
    assert!(
        out.contains(r#""captured_volume":"2""#) && out.contains(r#""status":"equality""#),
        "{out}"
    );
    let o = run(&["grunbaum", "--halfspace", "1,0", "-"], P2);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn toric_and_certificate() {
    let out = stdout(&run(&["toric-report", "-"], P2));
    assert!(out.contains(r#""degree":"9""#) && out.contains(r#""is_projective_space":true"#));
    let out = stdout(&run(&["certify-equality", "-"], CENTERED));
    assert_eq!(out, "t\tequality\tx -> [1 0; 0 1] x + (1, 1)\n");
}

#[test]
fn proof_trace_files() {
    let dir = std::env::temp_dir().join(format!("ehrhart-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (q, k) = (dir.join("q.txt"), dir.join("k.txt"));
    std::fs::write(&q, P2).unwrap();
    std::fs::write(&k, CENTERED).unwrap();
    let o = run(
        &[
            "proof-trace",
            "--q",
            q.to_str().unwrap(),
            "--k",
            k.to_str().unwrap(),
        ],
        "",
    );
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 3);
    assert!(out.lines().all(|l| l.contains(r#""status":"equality""#)));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn enumerate_then_scan() {
    let corpus = stdout(&run(&["enum-fano", "--dim", "2", "--bound", "3"], ""));
    assert_eq!(corpus.matches("# id:").count(), 16);
    let o = run(
        &["scan", "--checks", "ehrhart,toric", "--summary-only", "-"],
        &corpus,
    );
    assert_eq!(o.status.code(), Some(0));
    let summary = String::from_utf8(o.stderr).unwrap();
    assert!(
        summary.contains("ehrhart: equality=1 strict=15"),
        "{summary}"
    );
    assert!(summary.contains("max degree: 9"), "{summary}");
}

#[test]
fn normal_form_and_equiv() {
    let out = stdout(&run(&["normal-form", "-"], CENTERED));
    let shifted = stdout(&run(&["normal-form", "-"], "2 3\n0 0\n3 0\n0 3\n"));
    assert_eq!(
        out.lines().skip(1).collect::<Vec<_>>(),
        shifted.lines().skip(1).collect::<Vec<_>>()
    );
}

#[test]
fn random_is_seeded() {
    let a = stdout(&run(&["random", "--dim", "3", "--count", "3"], ""));
    let b = stdout(&run(&["random", "--dim", "3", "--count", "3"], ""));
    assert_eq!(a, b);
    assert_eq!(a.matches("# id:").count(), 3);
}

#[test]
fn exit_codes() {
    let o = run(&["volume", "-"], "2 3\n1 0 0\n0 1\n-1 -1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr).unwrap().contains("line 2"));
    assert_eq!(
        run(&["dual", "-"], "2 3\n0 0\n1 0\n0 1\n").status.code(),
        Some(2)
    );
    assert_eq!(run(&["no-such-command"], "").status.code(), Some(2));
    assert_eq!(run(&["check", "nope", "-"], P2).status.code(), Some(2));
    assert_eq!(run(&["enum-fano", "--dim", "3"], "").status.code(), Some(2));
}
