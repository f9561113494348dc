use std::process::{Command, Output};

fn twodom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twodom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exact_on_prism() {
    let o = twodom(&["exact", "--named", "K4xK2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "gamma2 = 4");
}

#[test]
fn builtin_coefficients_pass() {
    for delta in ["6", "7", "8", "9"] {
        let o = twodom(&["check-coeffs", "--builtin", delta]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o).trim(), "41 condition families: all satisfied");
    }
}

#[test]
fn violated_coefficients_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // a = s breaks the strict first condition, among others
    let y: Vec<u32> = (0..8).map(|i| i + 1).collect();
    let b: Vec<u32> = (0..8).collect();
    let text = serde_json::json!({"d": 6, "s": 10, "a": 10, "y": y, "b": b}).to_string();
    std::fs::write(&path, text).unwrap();
    let o = twodom(&["check-coeffs", "--coeffs", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated"));
}

#[test]
fn optimize_prints_a_star_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lp.json");
    let o = twodom(&["optimize", "-d", "6", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("a* = 0.4"));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["d"], 6);
    assert_eq!(v["verified"], true);
    assert!(v["a_star"].as_str().unwrap().contains('/'));
    assert!(v["assignment"]["y_7"].is_string());
}

#[test]
fn solve_writes_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("g.txt");
    let cert = dir.path().join("cert.json");
    let o = twodom(&[
        "gen",
        "--n",
        "30",
        "--d",
        "7",
        "--seed",
        "9",
        "--out",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    for alg in ["rule", "weight", "swap"] {
        let o = twodom(&[
            "solve",
            "--algorithm",
            alg,
            "--graph",
            graph.to_str().unwrap(),
            "--out",
            cert.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{alg}: {}", stdout(&o));
        assert!(stdout(&o).starts_with("|D| = "));
        let v: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
        assert_eq!(v["version"], 1);
    }
}

#[test]
fn bench_is_reproducible() {
    let args = [
        "bench",
        "--seed",
        "42",
        "--trials",
        "2",
        "--degrees",
        "6,7",
        "--n-max",
        "60",
    ];
    let first = twodom(&args);
    let second = twodom(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.starts_with("d,n,seed,algorithm,size,bound,ok\n"));
    assert_eq!(text.lines().count(), 1 + 2 * 2 * 3);
}

#[test]
fn ratios_and_comparison_table() {
    let o = twodom(&["verify-corollary"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().filter(|l| l.ends_with(" ok")).count(), 4);
    let o = twodom(&["table1", "--deltas", "6,7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 3);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(twodom(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(twodom(&["exact"]).status.code(), Some(2));
    assert_eq!(
        twodom(&["exact", "--graph", "/definitely/missing"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        twodom(&["solve", "--named", "K4", "--builtin", "6"])
            .status
            .code(),
        Some(2)
    );
}
