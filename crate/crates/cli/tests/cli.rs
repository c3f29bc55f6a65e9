use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_scalerep"))
        .args(args)
        .env_remove("SCALEREP_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn gauge_summary(args: &[&str]) -> serde_json::Value {
    let o = run(&[&["gauge"], args].concat());
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    v["summary"].clone()
}

#[test]
fn eval_views() {
    let base = [
        "eval", "--expr", "x*y", "--bind", "x=2", "--bind", "y=5", "--struct", "rat:r=3",
    ];
    let ext = run(&[&base[..], &["--view", "external"]].concat());
    assert_eq!((code(&ext), stdout(&ext).as_str()), (0, "30"));
    let int = run(&[&base[..], &["--view", "internal"]].concat());
    assert_eq!((code(&int), stdout(&int).as_str()), (0, "10"));
    let b = run(&[&base[..], &["--view", "base"]].concat());
    assert_eq!(stdout(&b), "10");
}

#[test]
fn eval_renders_exact_literals() {
    let o = run(&[
        "eval", "--expr", "x/y", "--bind", "x=1", "--bind", "y=3", "--struct", "rat:r=2",
    ]);
    assert_eq!(stdout(&o), "2/3");
    let o = run(&["eval", "--expr", "x*x", "--bind", "x=1i", "--struct", "cpx:c=1"]);
    assert_eq!(stdout(&o), "-1");
}

#[test]
fn eval_errors_exit_2() {
    let o = run(&["eval", "--expr", "x/"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    assert_eq!(code(&run(&["eval", "--expr", "x+1"])), 2, "unbound variable");
    assert_eq!(
        code(&run(&["eval", "--expr", "x", "--bind", "x"])),
        2,
        "malformed binding"
    );
    assert_eq!(code(&run(&["eval", "--expr", "1/0"])), 2, "division by zero");
    assert_eq!(
        code(&run(&["eval", "--expr", "1", "--struct", "rat:r=0"])),
        2,
        "zero scale"
    );
}

#[test]
fn check_passes_and_mismatches() {
    let o = run(&[
        "check",
        "--suite",
        "field",
        "--struct",
        "cpx:c=2+1i",
        "--samples",
        "500",
        "--seed",
        "42",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("PASS"));
    let o = run(&["check", "--suite", "order", "--struct", "int:j=-1", "--samples", "200"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&run(&["check", "--suite", "nat", "--struct", "cpx:c=1i"])), 2);
    assert_eq!(code(&run(&["check", "--suite", "ring", "--struct", "rat:r=1"])), 2);
    assert_eq!(
        code(&run(&["check", "--suite", "field", "--struct", "rat:r=1", "--bogus"])),
        2
    );
}

#[test]
fn check_corruptions_exit_1_with_json_witness() {
    for (suite, lit, corrupt) in [
        ("field", "rat:r=3", "unscaled-div"),
        ("order", "rat:r=-2", "unflipped-order"),
        ("conj", "cpx:c=1+1i", "conj-scale"),
    ] {
        let o = run(&[
            "check",
            "--suite",
            suite,
            "--struct",
            lit,
            "--samples",
            "200",
            "--corrupt",
            corrupt,
            "--json",
        ]);
        assert_eq!(code(&o), 1, "{suite} {corrupt}");
        let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert_eq!(v["pass"], false);
        assert!(!v["failures"].as_array().unwrap().is_empty());
    }
}

#[test]
fn check_seed_from_environment() {
    let args = [
        "check",
        "--suite",
        "field",
        "--struct",
        "rat:r=7/3",
        "--samples",
        "50",
        "--json",
    ];
    let flag = run(&[&args[..], &["--seed", "9"]].concat());
    let env = Command::new(env!("CARGO_BIN_EXE_scalerep"))
        .args(args)
        .env("SCALEREP_SEED", "9")
        .output()
        .unwrap();
    assert_eq!(flag.stdout, env.stdout);
    let v: serde_json::Value = serde_json::from_slice(&env.stdout).unwrap();
    assert_eq!(v["seed"], 9);
}

#[test]
fn compose_examples() {
    let o = run(&["compose", "rat:r=3/2", "rat:r=2/3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "rat:r=1"));
    let o = run(&["compose", "cpx:c=1i", "cpx:c=1i"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "cpx:c=-1"));
    assert_eq!(
        stdout(&run(&["compose", "int:j=2", "int:j=-3", "int:j=5"])),
        "int:j=-30"
    );
    assert_eq!(code(&run(&["compose", "rat:r=2"])), 2);
    assert_eq!(code(&run(&["compose", "rat:r=2", "cpx:c=2"])), 2);
    assert_eq!(code(&run(&["compose", "rat:r=2", "rat:r=0"])), 2);
}

#[test]
fn gauge_examples() {
    let s = gauge_summary(&["--potential", "const:0"]);
    assert_eq!(s["max_abs_difference"].as_f64().unwrap(), 0.0);
    let s = gauge_summary(&["--field", "transport"]);
    assert!(s["max_abs_covariant"].as_f64().unwrap() < 1e-12);
    assert_eq!(code(&run(&["gauge", "--sites", "1"])), 2);
    assert_eq!(code(&run(&["gauge", "--potential", "cos:1"])), 2);
    assert_eq!(code(&run(&["gauge", "--direction", "1"])), 2);
}

#[test]
fn wyz_verdicts() {
    assert_eq!(code(&run(&["wyz", "--w", "2", "--y", "2", "--z", "2"])), 0);
    let o = run(&["wyz", "--w", "2", "--y", "3", "--z", "2", "--json"]);
    assert_eq!(code(&o), 1);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["failures"][0]["bindings"]["term"], "(x / y)");
    assert_eq!(code(&run(&["wyz", "--w", "0", "--y", "1", "--z", "1"])), 2);
}

#[test]
fn help_and_usage() {
    assert_eq!(code(&run(&["--help"])), 0);
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn byte_determinism() {
    let cases: [&[&str]; 4] = [
        &[
            "check",
            "--suite",
            "conj",
            "--struct",
            "cpx:c=2+1i",
            "--samples",
            "100",
            "--seed",
            "3",
            "--json",
        ],
        &[
            "check",
            "--suite",
            "order",
            "--struct",
            "rat:r=-2",
            "--corrupt",
            "unflipped-order",
            "--samples",
            "100",
        ],
        &["gauge", "--dims", "2", "--sites", "6"],
        &["wyz", "--w", "1", "--y", "2", "--z", "3", "--json"],
    ];
    for args in cases {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}
