use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_square-ice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

#[test]
fn enumerate_three_routes() {
    let out = run(&["enumerate", "--n", "4", "--x", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "N,x,r,value,routes,agree\n4,1,,42,closed;determinant;oracle,true\n"
    );
}

#[test]
fn enumerate_beyond_oracle() {
    let out = run(&["enumerate", "--n", "10", "--x", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("10,2,,35184372088832,closed;determinant,true"));
}

#[test]
fn refined_minus_half_json() {
    let out = run(&["refined", "--n", "5", "--x", "3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "refined");
    let values: Vec<&str> = doc["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["value"].as_str().unwrap())
        .collect();
    assert_eq!(values, ["90", "495", "855", "495", "90"]);
}

#[test]
fn refined_small_rows() {
    let out = run(&["refined", "--n", "4", "--x", "1"]);
    let values: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().to_string())
        .collect();
    assert_eq!(values, ["7", "14", "14", "7"]);
    let out = run(&["refined", "--n", "2", "--x", "2"]);
    assert_eq!(stdout(&out).lines().count(), 3);
    assert!(stdout(&out).contains("2,2,2,1,"));
}

#[test]
fn verify_appendix() {
    let out = run(&["verify", "--suite", "appendix", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("suite,check,passed,detail\n"));
    assert!(!text.contains(",false,"));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--suite", "all", "--max", "4", "--format", "json"]);
    let b = run(&["verify", "--suite", "all", "--max", "4", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&["enumerate", "--n", "3", "--x", "7"]).status.code(), Some(1));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(1));
    assert_eq!(
        run(&["refined", "--n", "3", "--x", "1", "--r", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(run(&["enumerate", "--n", "0", "--x", "1"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn writes_to_file() {
    let dir = std::env::temp_dir().join(format!("square-ice-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.csv");
    let out = run(&[
        "enumerate",
        "--n",
        "3",
        "--x",
        "3",
        "--out",
        path.to_str().unwrap(),
        "--scientific",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text,
        "N,x,r,value,routes,agree,approx\n3,3,,9,closed;determinant;oracle,true,9.000000e0\n"
    );
    std::fs::remove_dir_all(dir).unwrap();
}
