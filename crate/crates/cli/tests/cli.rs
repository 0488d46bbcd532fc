use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shortcircuit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn field<'a>(text: &'a str, name: &str) -> &'a str {
    text.lines()
        .find_map(|l| {
            l.strip_prefix(&format!("{name}: "))
                .or_else(|| (l == format!("{name}:")).then_some(""))
        })
        .unwrap_or_else(|| panic!("no {name} in {text}"))
}

#[test]
fn close_trivial_braid() {
    let o = run(&["close", ""]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "gauss"), "");
    assert_eq!(field(&text, "crossings"), "0");
}

#[test]
fn close_a12_simplifies_away() {
    let o = run(&["close", "A(1,2)", "--simplify"]);
    assert!(o.status.success());
    assert_eq!(field(&stdout(&o), "crossings"), "0");
    let raw = run(&["close", "A(1,2)"]);
    assert_eq!(field(&stdout(&raw), "crossings"), "2");
    assert_eq!(field(&stdout(&raw), "strands"), "3");
}

#[test]
fn close_rejects_impure_braid() {
    let o = run(&["close", "s1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("braid is not pure"));
}

#[test]
fn parse_errors_report_position() {
    let o = run(&["close", "s1 s1 q"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("byte 6"), "{}", stderr(&o));
}

#[test]
fn invariants_of_trivial_braid() {
    let text = stdout(&run(&["invariants", ""]));
    assert_eq!(field(&text, "jones"), "1");
    assert_eq!(field(&text, "v2"), "0");
    assert_eq!(field(&text, "v3"), "0");
    assert_eq!(field(&text, "bridge_upper_bound"), "1");
}

#[test]
fn invariants_of_fixture_trefoil() {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/knots.json");
    let fixtures: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let word = fixtures["trefoil_left"]["word"].as_str().unwrap();
    let text = stdout(&run(&["invariants", word]));
    assert_eq!(field(&text, "v2"), "1");
    assert_eq!(
        field(&text, "jones"),
        fixtures["trefoil_left"]["jones"].as_str().unwrap()
    );
}

#[test]
fn invariants_accept_gauss_and_pd() {
    let g = stdout(&run(&[
        "invariants",
        "--format",
        "gauss",
        "O1+ U2+ O3+ U1+ O2+ U3+",
    ]));
    assert_eq!(field(&g, "v3"), "1");
    assert_eq!(field(&g, "bridge_upper_bound"), "n/a");
    let pd = field(&stdout(&run(&["close", "A(1,3)"])), "pd").to_string();
    let p = stdout(&run(&["invariants", "--format", "pd", &pd]));
    assert_eq!(field(&p, "v2"), "1");
}

#[test]
fn crossing_cap_exits_with_resource_code() {
    let o = run(&["invariants", "A(1,3) A(1,3) A(1,3)", "--cap", "4"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("cap"));
    let o = run(&["close", "A(1,2)^60", "--max-letters", "100"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn json_mirrors_text() {
    let text = stdout(&run(&["invariants", "A(1,2) A(2,3)^-1"]));
    let json: Value =
        serde_json::from_str(&stdout(&run(&["invariants", "A(1,2) A(2,3)^-1", "--json"]))).unwrap();
    for key in ["jones", "v2", "v3", "writhe", "bridge_upper_bound"] {
        let v = match &json[key] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        assert_eq!(field(&text, key), v, "{key}");
    }
}

#[test]
fn verify_examples_pass() {
    for (suite, count) in [("orbit", "50"), ("tensor", "50"), ("lcs", "25")] {
        let o = run(&["verify", suite, "--seed", "7", "--count", count]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("{count}/{count} passed")));
    }
}

#[test]
fn verify_rejects_unknown_suite_and_missing_seed() {
    assert_eq!(
        run(&["verify", "nope", "--seed", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "orbit"]).status.code(), Some(2));
    assert_eq!(run(&["orbit", "A(1,3)"]).status.code(), Some(2));
    assert_eq!(run(&["lcs", "sample", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn seeded_output_is_reproducible() {
    for args in [
        &["verify", "plat", "--seed", "11", "--count", "20"][..],
        &["orbit", "A(1,3)", "--seed", "5", "--steps", "6"],
        &[
            "lcs",
            "sample",
            "--n",
            "4",
            "--strands",
            "5",
            "--seed",
            "3",
            "--json",
        ],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn orbit_log_has_one_record_per_step() {
    let json: Value = serde_json::from_str(&stdout(&run(&[
        "orbit", "A(1,3)", "--seed", "5", "--steps", "6", "--json",
    ])))
    .unwrap();
    let records = json.as_array().unwrap();
    assert_eq!(records.len(), 7);
    for r in records {
        assert_eq!(r["fingerprint"], records[0]["fingerprint"]);
        for key in ["step", "side", "generator", "exponent", "word_length"] {
            assert!(r.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn lcs_commands() {
    let s = stdout(&run(&["lcs", "sample", "--n", "3", "--seed", "4"]));
    assert_eq!(field(&s, "v2"), "0");
    assert_eq!(field(&s, "verdict"), "consistent with n-trivial");
    assert!(field(&s, "johnson_degree").parse::<usize>().unwrap() >= 3);
    let c = stdout(&run(&["lcs", "certify", "A(1,3)", "--n", "3"]));
    assert_eq!(field(&c, "verdict"), "not n-trivial");
    assert_eq!(
        run(&["lcs", "certify", "A(1,3)", "--n", "5"]).status.code(),
        Some(3)
    );
    let j = stdout(&run(&["lcs", "johnson", "A(1,2)", "--dmax", "4"]));
    assert_eq!(field(&j, "johnson_degree"), "1");
}

#[test]
fn plat_and_tensor() {
    let p = stdout(&run(&["plat", "s1 s1", "--simplify"]));
    assert_eq!(field(&p, "crossings"), "0");
    let w = run(&["plat", "A(1,3)", "--wrap", "--json"]);
    assert!(w.status.success());
    let linked = run(&["plat", "", "--strands", "4"]);
    assert_eq!(linked.status.code(), Some(3));
    let t = stdout(&run(&["tensor", "A(1,3)", "A(1,2) A(2,3)^-1"]));
    assert_eq!(field(&t, "match"), "true");
}

#[test]
fn search_finds_trefoil_and_figure_eight() {
    let json: Value = serde_json::from_str(&stdout(&run(&[
        "search",
        "--strands",
        "3",
        "--max-len",
        "2",
        "--json",
    ])))
    .unwrap();
    let hits = json.as_array().unwrap();
    let has = |v2: i64, v3: i64| {
        hits.iter()
            .any(|h| h["fingerprint"]["v2"] == v2 && h["fingerprint"]["v3"] == v3)
    };
    assert!(has(1, -1) && has(1, 1) && has(-1, 0));
}
