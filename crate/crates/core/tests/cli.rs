use std::process::{Command, Output};

fn adequate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_adequate"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_owned()
}

#[test]
fn exit_codes() {
    assert_eq!(adequate(&["eq", "(x)+x", "x"]).status.code(), Some(0));
    assert_eq!(adequate(&["eq", "x", "y"]).status.code(), Some(1));
    let bad = adequate(&["eval", "(a"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("UnbalancedParenthesis at offset 2"));
    assert_eq!(adequate(&["bench", "--reps", "0"]).status.code(), Some(2));
    assert_eq!(adequate(&["prune", "{\"n\": 1"]).status.code(), Some(2));
    assert_eq!(adequate(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn normal_form_and_pruning() {
    assert_eq!(stdout(&adequate(&["nf", "(b)+(a)+"])), "(a)+(b)+");
    let evaluated = adequate(&["eval", "(a)+a"]);
    let pruned = adequate(&["prune", &stdout(&evaluated)]);
    assert_eq!(stdout(&pruned), stdout(&adequate(&["eval", "a"])));
    assert_eq!(stdout(&adequate(&["prune", "(a)+a"])), stdout(&pruned));
}

#[test]
fn generation_is_deterministic() {
    let a = adequate(&["--seed", "42", "gen", "--edges", "30"]);
    let b = adequate(&["--seed", "42", "gen", "--edges", "30"]);
    let c = adequate(&["--seed", "43", "gen", "--edges", "30"]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tree.dot");
    let out = adequate(&["--dot", path.to_str().unwrap(), "prune", "(a)+a"]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert!(dot.contains("0 -> 1 [label=\"a\"];"));
}
