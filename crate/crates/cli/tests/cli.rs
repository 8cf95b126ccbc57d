use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pathcycle"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

#[test]
fn xi_of_a_path() {
    let o = run(&["xi", "-"], "digraph 3\n1 2\n2 3\n");
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["basis"], "m");
    let coeffs: Vec<(String, String)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["x_partition"].to_string(), t["num"].to_string()))
        .collect();
    assert_eq!(
        coeffs,
        vec![("[3]".into(), "1".into()), ("[2,1]".into(), "2".into()), ("[1,1,1]".into(), "6".into())]
    );
}

#[test]
fn cover_of_a_loop() {
    let o = run(&["--pretty", "cover", "-"], "digraph 1\n1 1\n");
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "i + j");
}

#[test]
fn xi_with_y_set_to_zero() {
    let o = run(&["--pretty", "xi", "--y0", "-"], "digraph 1\n1 1\n");
    assert_eq!(stdout(&o).trim(), "m[1]");
}

#[test]
fn printed_functions_round_trip_through_expand() {
    let cases = [
        (vec!["xg", "-", "--basis", "s"], "graph 3\n1 2\n2 3\n", "s"),
        (vec!["xg", "-", "--basis", "xitilde"], "poset 3\n1 2\n", "xitilde"),
        (vec!["xi", "-", "--basis", "e"], "digraph 2\n1 2\n2 1\n2 2\n", "e"),
    ];
    for (args, input, basis) in cases {
        let first = run(&args, input);
        assert!(first.status.success());
        let again = run(&["expand", "--basis", basis], &stdout(&first));
        assert!(again.status.success(), "{}", String::from_utf8_lossy(&again.stderr));
        assert_eq!(stdout(&first), stdout(&again));
    }
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["xgt", "-"], "graph 4\n1 2\n2 3\n3 4\n1 4\n");
    let b = run(&["xgt", "-"], "graph 4\n1 2\n2 3\n3 4\n1 4\n");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rook_chitilde_and_ascent() {
    let rook = json(&run(&["rook", "-"], "digraph 2\n1 1\n1 2\n"));
    assert_eq!(rook["rook_numbers"], serde_json::json!([1, 2, 0]));
    let chi = run(&["--pretty", "chitilde", "-"], "graph 2\n1 2\n");
    assert_eq!(stdout(&chi).trim(), "m^2 + n");
    // both permutations of K_2 have type (1,1)
    let asc = json(&run(&["ascent", "-"], "graph 2\n1 2\n"));
    assert_eq!(asc["counts"], serde_json::json!([{"partition": [1, 1], "count": 2}]));
}

#[test]
fn check_all_small_passes() {
    let o = run(&["check", "all", "--max-vertices", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(lines.len() > 40);
    assert!(lines.iter().all(|l| l["passed"] == true && l.get("elapsed_ms").is_none()));
}

#[test]
fn check_reports_are_deterministic() {
    let a = run(&["check", "symfunc", "--max-vertices", "4", "--seed", "11"], "");
    let b = run(&["check", "symfunc", "--max-vertices", "4", "--seed", "11"], "");
    assert_eq!(a.stdout, b.stdout);
    let timed = run(&["check", "csv", "--max-vertices", "2", "--timings"], "");
    assert!(stdout(&timed).contains("elapsed_ms"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let o = run(&["xg", "-"], "graph 2\n1 5\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["check", "no-such-check"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(run(&["expand", "--basis", "q"], "{}").status.code(), Some(2));
    assert_eq!(run(&["xi", "-"], "graph 2\n1 2\n").status.code(), Some(2));
}

#[test]
fn census_reports_the_class_table() {
    let o = run(&["census"], "");
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let classes = &lines[..lines.len() - 1];
    assert_eq!(classes.len(), 6);
    assert_eq!(classes.iter().filter(|c| c["e_positive"] == true).count(), 2);
    // the class-count comparison is recorded as a failing report
    assert_eq!(lines.last().unwrap()["check"], "census");
    assert_eq!(o.status.code(), Some(1));
}
