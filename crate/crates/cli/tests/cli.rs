use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hambypass"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_then_check_t5() {
    let g = run(&["gen", "t5"], "");
    assert_eq!(g.status.code(), Some(0));
    let text = stdout(&g);
    let c = run(&["check"], &text);
    assert_eq!(c.status.code(), Some(0));
    let out = stdout(&c);
    for line in [
        "order=5",
        "arcs=10",
        "strong=true",
        "two_strong=false",
        "meyniel_deficiency=all-adjacent",
        "family=T5",
    ] {
        assert!(out.lines().any(|l| l == line), "{line} missing from\n{out}");
    }
    let w = run(&["witness", "--kind", "bypass"], &text);
    assert_eq!((w.status.code(), stdout(&w).as_str()), (Some(0), "NONE\n"));
}

#[test]
fn edge_list_input_and_witness() {
    let edges = run(&["gen", "kstar:4", "--format", "edges"], "");
    let text = stdout(&edges);
    assert!(text.starts_with("p 4\n"));
    let w = run(&["witness", "--kind", "hamcycle"], &text);
    assert_eq!(w.status.code(), Some(0));
    assert!(stdout(&w).starts_with("hamcycle "));
    let c = run(&["check"], &text);
    assert!(stdout(&c).contains("family=Kstar(4)"));
}

#[test]
fn dpk_is_recognized() {
    let g = run(&["gen", "dpk:6,2"], "");
    let c = run(&["check"], &stdout(&g));
    let out = stdout(&c);
    assert!(out.contains("meyniel_deficiency=0\n"));
    assert!(out.contains("family=Dpk(6,2)\n"));
}

#[test]
fn verify_is_deterministic_and_exits_zero() {
    let args = [
        "verify",
        "--claim",
        "Thm_1_18",
        "--p",
        "4",
        "--workers",
        "2",
    ];
    let a = run(&args, "");
    let b = run(
        &[
            "verify",
            "--claim",
            "thm_1_18",
            "--p",
            "4",
            "--workers",
            "1",
        ],
        "",
    );
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let out = stdout(&a);
    assert!(out.contains("total=4096\n"));
    assert!(out.contains("counterexample=0\n"));
    assert!(String::from_utf8(a.stderr)
        .unwrap()
        .starts_with("wall_time_ms="));
}

#[test]
fn sampled_verify_is_reproducible() {
    let args = [
        "verify", "--claim", "Cor_3", "--p", "7", "--mode", "sampled", "--seed", "3", "--count",
        "5000",
    ];
    let a = run(&args, "");
    let b = run(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert!(stdout(&a).contains("total=5000\n"));
}

#[test]
fn explore_reports_hits_with_exit_one() {
    let o = run(
        &["explore", "--condition", "manoussakis_54", "--p", "5"],
        "",
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("form=5:1aca7\n"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["verify", "--claim", "Thm_1_18", "--p", "6"],
        &[
            "verify", "--claim", "Thm_1_18", "--p", "5", "--mode", "sampled", "--seed", "1",
        ],
        &["verify", "--claim", "Thm_9_9", "--p", "4"],
        &[
            "verify", "--claim", "Thm_1_18", "--p", "11", "--mode", "sampled", "--seed", "1",
            "--count", "5",
        ],
        &["explore", "--condition", "bjgl_51", "--p", "6"],
        &["gen", "dpk:3,2"],
        &["witness", "--kind", "zigzag"],
    ];
    for args in cases {
        let o = run(args, "p 3\n0 1\n");
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn malformed_input_exits_two() {
    for text in ["&B???", "p 3\n0 0\n", "0 1\n", ""] {
        let o = run(&["check"], text);
        assert_eq!(o.status.code(), Some(2), "{text:?}");
        assert!(!o.stderr.is_empty());
    }
}
