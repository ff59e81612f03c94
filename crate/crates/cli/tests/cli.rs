use std::process::{Command, Output};

use lie2_core::charlib::CharacterTable;
use lie2_core::report::VerificationReport;

struct Run {
    _cache: tempfile::TempDir,
    cache_path: std::path::PathBuf,
}

impl Run {
    fn new() -> Self {
        let cache = tempfile::tempdir().unwrap();
        let cache_path = cache.path().to_path_buf();
        Run { _cache: cache, cache_path }
    }

    fn lie2(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_lie2"))
            .args(args)
            .arg("--quiet")
            .env("LIE2_CACHE_DIR", &self.cache_path)
            .output()
            .unwrap()
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn ok(o: Output) -> String {
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn dims_tables() {
    let r = Run::new();
    assert_eq!(ok(r.lie2(&["dims", "--operad", "lie2", "--max-n", "5"])), "1 2 9 64 625\n");
    assert_eq!(ok(r.lie2(&["dims", "--operad", "com2", "--max-n", "4"])), "1 2 3 4\n");
    assert_eq!(
        ok(r.lie2(&["dims", "--operad", "p2", "--max-n", "4", "--route", "invert"])),
        "1 3 16 125\n"
    );
    assert_eq!(
        ok(r.lie2(&["dims", "--operad", "lie2", "--max-n", "4", "--route", "brute"])),
        "1 2 9 64\n"
    );
    assert_eq!(
        ok(r.lie2(&["dims", "--operad", "com2", "--max-n", "4", "--route", "brute"])),
        "1 2 3 4\n"
    );
}

#[test]
fn character_values() {
    let r = Run::new();
    let out = ok(r.lie2(&["character", "--operad", "lie2", "--n", "2", "--cycle-type", "0,1"]));
    assert!(out.ends_with("[0,1]  -q - q^-1\n"), "{out}");
    let out = ok(r.lie2(&["character", "--operad", "p2", "--n", "2", "--cycle-type", "2", "--format", "json"]));
    assert_eq!(
        out,
        "{\"operad\":\"p2\",\"n\":2,\"classes\":[{\"cycle_type\":[2],\"value\":{\"-1\":\"1\",\"0\":\"1\",\"1\":\"1\"}}]}\n"
    );
}

#[test]
fn brute_and_formula_agree_on_three_cycles() {
    let r = Run::new();
    let args = ["character", "--operad", "lie2", "--n", "5", "--cycle-type", "2,0,1"];
    let formula = ok(r.lie2(&args));
    let brute = ok(r.lie2(&[&args[..], &["--route", "brute"]].concat()));
    assert_eq!(formula, brute);
}

#[test]
fn mt_route_reports_printed_form_differences() {
    let r = Run::new();
    let out = ok(r.lie2(&["character", "--operad", "lie2", "--n", "3", "--route", "mt"]));
    assert!(out.contains("[0,0,1]  -q^2 - 1 - q^-2"), "{out}");
    assert!(out.contains("printed form on [0,0,1]: 0"), "{out}");
    let formula = ok(r.lie2(&["character", "--operad", "p2", "--n", "4", "--format", "json"]));
    let mt = ok(r.lie2(&["character", "--operad", "p2", "--n", "4", "--route", "mt", "--format", "json"]));
    let formula: CharacterTable = serde_json::from_str(&formula).unwrap();
    let mt: serde_json::Value = serde_json::from_str(&mt).unwrap();
    assert_eq!(serde_json::to_value(&formula.classes).unwrap(), mt["classes"]);
    assert!(!mt["printed"].as_array().unwrap().is_empty());
}

#[test]
fn character_json_roundtrips_byte_identically() {
    let r = Run::new();
    let out = ok(r.lie2(&["character", "--operad", "lie2", "--n", "5", "--format", "json"]));
    let table: CharacterTable = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&table).unwrap() + "\n", out);
    assert_eq!(table.classes.len(), 7);
}

#[test]
fn usage_errors_exit_two() {
    let r = Run::new();
    for args in [
        &["character", "--operad", "lie2", "--n", "3", "--cycle-type", "1,x"][..],
        &["character", "--operad", "lie2", "--n", "3", "--cycle-type", "1,1,1"],
        &["dims", "--operad", "nope"],
        &["dims", "--operad", "lie2", "--route", "brute", "--max-n", "9"],
        &["verify", "--suite", "bogus"],
        &["verify", "--suite", "poset", "--max-n", "6"],
        &["poset", "--n", "6"],
        &["frobnicate"],
    ] {
        assert_eq!(r.lie2(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn budget_exhaustion_exits_three() {
    let r = Run::new();
    let o = r.lie2(&["poset", "--n", "4", "--check", "homology", "--budget", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn verify_reports() {
    let r = Run::new();
    for (suite, n) in [("dims", "5"), ("poset", "4"), ("characters", "4"), ("residue", "1")] {
        let out = ok(r.lie2(&["verify", "--suite", suite, "--max-n", n]));
        let report: VerificationReport = serde_json::from_str(&out).unwrap();
        assert!(report.pass);
        assert_eq!(report.suite, suite);
        assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", out);
    }
    let out = ok(r.lie2(&["verify", "--suite", "poset", "--max-n", "4"]));
    assert!(out.contains("\"betti n=4\""));
}

#[test]
fn basis_counts_and_listing() {
    let r = Run::new();
    assert_eq!(ok(r.lie2(&["basis", "--n", "3"])), "9\n");
    assert_eq!(ok(r.lie2(&["basis", "--n", "4", "--p2"])), "125\n");
    assert_eq!(ok(r.lie2(&["basis", "--n", "2", "--list"])), "{a1,a2}1\n{a1,a2}2\n");
    assert_eq!(ok(r.lie2(&["basis", "--n", "4", "--verify"])), "64\n");
}

#[test]
fn poset_checks() {
    let r = Run::new();
    let out = ok(r.lie2(&["poset", "--n", "2", "--check", "cm"]));
    assert!(out.starts_with("Pi_2: CM, L=1"), "{out}");
    assert_eq!(ok(r.lie2(&["poset", "--n", "3", "--check", "homology", "--format", "json"])), "[1,0,0]\n");
    let out = ok(r.lie2(&["poset", "--n", "3", "--check", "star"]));
    assert!(out.contains("injective"));
    let edges = ok(r.lie2(&["poset", "--n", "2", "--format", "edges"]));
    assert_eq!(edges, "{1|0}{2|0} < {1,2|0}\n{1|0}{2|0} < {1,2|1}\n");
    assert!(ok(r.lie2(&["poset", "--n", "3", "--check", "semimodular", "--format", "json"])).contains("\"failures\":[]"));
    assert_eq!(r.lie2(&["poset", "--n", "4", "--check", "semimodular"]).status.code(), Some(1));
    ok(r.lie2(&["poset", "--n", "4", "--check", "intervals"]));
}

#[test]
fn output_is_independent_of_thread_count() {
    let r = Run::new();
    let args = ["character", "--operad", "p2", "--n", "6", "--format", "json"];
    let one = ok(r.lie2(&[&args[..], &["--jobs", "1"]].concat()));
    let four = ok(r.lie2(&[&args[..], &["--jobs", "4"]].concat()));
    assert_eq!(one, four);
}
