use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_s6quartic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_all_passes() {
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("13/13 passed\n"));
}

#[test]
fn verify_selected_checks_as_json() {
    let o = run(&[
        "verify",
        "--check",
        "special-t",
        "--check",
        "lemma-2-1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].contains(r#""check_id":"lemma-2-1""#));
    assert!(lines[1].contains(r#""check_id":"special-t""#));
    assert!(lines.iter().all(|l| l.contains(r#""status":"pass""#)));
}

#[test]
fn exploratory_scan_takes_t_from_flags() {
    let o = run(&[
        "verify",
        "--check",
        "scan-todd",
        "--t",
        "10/7",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(r#""t":"10/7""#));
}

#[test]
fn failing_check_exits_one() {
    let o = run(&["verify", "--check", "scan-smoke", "--cap", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("error"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--check", "no-such-check"][..],
        &["verify", "--format", "xml"],
        &["verify", "--cap", "0"],
        &["verify", "--config", "/nonexistent/s6quartic.conf"],
        &["scan", "--t", "1/0", "--alphabet", "signs"],
        &["eval", "--poly", "x9", "--point", "[1,0,0,0,0,0]"],
        &["eval", "--poly", "x0", "--point", "[0,0,0,0,0,0]"],
        &["bogus"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn config_file_is_read_and_flags_override() {
    let dir = std::env::temp_dir().join(format!("s6quartic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("run.conf");
    std::fs::write(&path, "[run]\nchecks = smooth-quadrics\nformat = json\n").unwrap();
    let p = path.to_str().unwrap();
    let o = run(&["verify", "--config", p]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with(r#"{"check_id":"smooth-quadrics""#));
    let o = run(&["verify", "--config", p, "--format", "text"]);
    assert!(stdout(&o).starts_with("check"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn scan_lists_the_orbit_of_o_prime() {
    let o = run(&["scan", "--t", "6", "--alphabet", "1,-1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.ends_with("node")).count(), 10);
    assert!(out.ends_with("10 singular point(s) on X_6\n"));
    let o = run(&["scan", "--t", "7", "--alphabet", "signs"]);
    assert_eq!(stdout(&o), "0 singular point(s) on X_7\n");
}

#[test]
fn eval_prints_an_exact_value() {
    let o = run(&[
        "eval",
        "--poly",
        "6*(x0^4+x1^4+x2^4+x3^4+x4^4+x5^4) - (x0^2+x1^2+x2^2+x3^2+x4^2+x5^2)^2",
        "--point",
        "[1, 1, w, w, w^2, w^2]",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
    let o = run(&[
        "eval",
        "--poly",
        "x0 + w*x1",
        "--point",
        "[2, 3, 0, 0, 0, 0]",
    ]);
    assert_eq!(stdout(&o), "1 + 3/2*w\n");
}
