//! End-to-end runs of the `raag` binary on the fixture graphs.

use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn raag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_raag"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

#[test]
fn go_order_under_recorded_tie_breaks() {
    let o = raag(&["analyze", &fixture("GO.graph"), "--tie-break", &fixture("GO.tiebreak")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(
        stdout(&o).lines().any(|l| l == "order: g b a f e d c"),
        "{}",
        stdout(&o)
    );
}

#[test]
fn ga_table_row() {
    let o = raag(&["analyze", &fixture("GA.graph")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let row = out.lines().find(|l| l.starts_with("f\t")).expect("row for f");
    assert_eq!(row.split('\t').nth(3), Some("{a,d,e,f,g}"));
}

#[test]
fn empty_graph_gives_empty_tables() {
    let o = raag(&["analyze", &fixture("empty.graph")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("K_X (0): \n"));
}

#[test]
fn analyze_json_is_deterministic() {
    let args = ["analyze", &fixture("GD.graph"), "--format", "json"];
    let (a, b) = (raag(&args), raag(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["K_X"].as_array().unwrap().len(), 7);
    assert_eq!(v["balanced"]["vertex"], "v");
}

#[test]
fn gd_obstruction_image_of_v() {
    let g = fixture("GD.graph");
    let o = raag(&[
        "aut",
        "eval",
        "lc({a,r,s},v) tr(v,a) tr(v,b) tr(v,a^-1)",
        "--on",
        "v",
        "--graph",
        &g,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "v a^-1 b a\n");
}

#[test]
fn inner_automorphism_is_inner() {
    let o = raag(&["aut", "classify", "inner(\"v\")", "--graph", &fixture("GD.graph")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("Inn: yes")), "{}", stdout(&o));
}

#[test]
fn relators_verify_passes_with_tsv() {
    for name in ["GD.graph", "GD_edge_point.graph"] {
        let o = raag(&["relators", "verify", &fixture(name), "--families", "R1-R11"]);
        assert_eq!(o.status.code(), Some(0), "{name}");
        let t = raag(&[
            "relators",
            "verify",
            &fixture(name),
            "--families",
            "R1-R11",
            "--format",
            "tsv",
        ]);
        assert!(stdout(&t).lines().skip(1).all(|l| l.ends_with("\tpass")), "{name}");
    }
}

#[test]
fn balanced_factorization_reports_the_witness() {
    let word = "lc({a,r,s},v) tr(v,a) tr(v,b) tr(v,a^-1)";
    let o = raag(&[
        "aut",
        "factor",
        word,
        "--target",
        "balanced",
        "--graph",
        &fixture("GD.graph"),
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("vertex v has a and b"));
}

#[test]
fn words_normalize_and_compare() {
    let g = fixture("GA.graph");
    assert_eq!(stdout(&raag(&["nf", "1", "--graph", &g])), "1\n");
    assert_eq!(raag(&["eq", "a a^-1", "1", "--graph", &g]).status.code(), Some(0));
    assert_eq!(raag(&["eq", "a", "1", "--graph", &g]).status.code(), Some(1));
}

#[test]
fn input_errors_exit_with_two() {
    let g = fixture("GA.graph");
    assert_eq!(raag(&["nf", "zz", "--graph", &g]).status.code(), Some(2));
    assert_eq!(raag(&["nf", "a"]).status.code(), Some(2));
    assert_eq!(raag(&["aut", "eval", "tr(a,a)", "--graph", &g]).status.code(), Some(2));
    assert_eq!(raag(&["analyze", &g, "--format", "tsv"]).status.code(), Some(2));
}

#[test]
fn export_dot_lists_edges() {
    let o = raag(&["export", "dot", &fixture("P4.graph"), "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("graph G {") && stdout(&o).contains("\"b\" -- \"c\";"));
}

#[test]
fn verify_paper_runs_selected_criteria() {
    let o = raag(&["verify-paper", "--only", "1,2,4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 3);
}
