//! End-to-end tests of the `cbg` binary: flags, formats, exit codes.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn cbg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cbg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn cbg_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cbg"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("binary finishes")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn generate_streams_decodable_graph6() {
    let out = cbg(&["generate", "-n", "14", "-g", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 1);
    let g = cbg_core::codec::decode_graph6(lines[0]).expect("valid graph6");
    assert_eq!(g.n(), 14);
    assert!(g.is_regular(3));
}

#[test]
fn generate_count_only() {
    let out = cbg(&["generate", "-n", "20", "-g", "6", "--count-only"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "10");
}

#[test]
fn generate_rejects_bad_parameters() {
    let out = cbg(&["generate", "-n", "13", "-g", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cbg(&["generate", "-n", "14", "-g", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = cbg(&["generate", "-n", "14", "-g", "6", "--split", "4/4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn split_partitions_union_to_the_full_census() {
    let full: BTreeSet<String> = stdout(&cbg(&["generate", "-n", "18", "-g", "6"]))
        .lines()
        .map(String::from)
        .collect();
    assert_eq!(full.len(), 3);
    let mut merged = BTreeSet::new();
    for k in 0..4 {
        let part = stdout(&cbg(&[
            "generate",
            "-n",
            "18",
            "-g",
            "6",
            "--split",
            &format!("{}/4", k),
        ]));
        for line in part.lines() {
            assert!(merged.insert(line.to_string()), "partitions must be disjoint");
        }
    }
    assert_eq!(merged, full);
}

#[test]
fn analyze_reports_and_error_records() {
    // K2 line, a malformed line, then K3.
    let input = "A_\nnot-a-graph6-line!!\nBw\n";
    let out = cbg_with_stdin(&["analyze"], input);
    assert_eq!(out.status.code(), Some(2), "malformed input yields exit 2");
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with('#'));
    assert!(lines[0].contains("certificate\tn\tgirth"));
    assert!(lines.iter().any(|l| l.starts_with("#error\t2\t")));
    // Record lines: one per valid graph.
    let records: Vec<&&str> = lines.iter().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(records.len(), 2);
}

#[test]
fn analyze_counterexample_fixture() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/counterexample_g.adj");
    let out = cbg(&["analyze", fixture, "--format", "adjlist"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let record = text
        .lines()
        .find(|l| !l.starts_with('#'))
        .expect("one record");
    let cells: Vec<&str> = record.split('\t').collect();
    // certificate n girth bipartite two_factor_count structure_set
    // pseudo_2fi vacuous two_factor_hamiltonian essentially_4ec cyclic_ec
    // aut_group_size vertex_transitive
    assert_eq!(cells[1], "30");
    assert_eq!(cells[2], "6");
    assert_eq!(cells[3], "true");
    assert_eq!(cells[4], "312");
    assert_eq!(cells[5], "(6,6,18)|(6,10,14)|(10,10,10)|(30)");
    assert_eq!(cells[6], "true");
    assert_eq!(cells[7], "false");
    assert_eq!(cells[8], "false");
    assert_eq!(cells[9], "true");
    assert_eq!(cells[10], "6");
    assert_eq!(cells[11], "144");
    assert_eq!(cells[12], "false");
}

#[test]
fn analyze_honors_field_selection() {
    let out = cbg_with_stdin(&["analyze", "--fields", "n,girth,pseudo_2fi"], "A_\n");
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "#n\tgirth\tpseudo_2fi");
    assert_eq!(lines[1], "2\tinfinite\ttrue");
}

#[test]
fn verify_counterexample_passes_by_default() {
    let out = cbg(&["verify-counterexample"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().filter(|l| l.starts_with("ok")).count(), 13);
    assert!(text.contains("13 of 13 checks passed"));
}

#[test]
fn verify_counterexample_fails_on_wrong_graph() {
    let fixture = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/fixtures/pappus.adj");
    let out = cbg(&["verify-counterexample", "--graph", fixture]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL  order 30 (n = 18)"));
}

#[test]
fn verify_counterexample_detects_mutation() {
    // Swap one edge of the reference graph: 0-1, 2-3 -> 0-2, 1-3.
    let g = cbg_core::constructions::named(cbg_core::constructions::Name::CounterexampleG);
    let mut edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .map(|e| (e.u, e.v))
        .filter(|&(u, v)| (u, v) != (0, 1) && (u, v) != (2, 3))
        .collect();
    edges.push((0, 2));
    edges.push((1, 3));
    let mutated = cbg_core::Graph::build(30, &edges).unwrap();
    let dir = std::env::temp_dir().join(format!("cbg-mutated-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mutated.adj");
    std::fs::write(&path, cbg_core::codec::write_adjlist(&mutated)).unwrap();

    let out = cbg(&["verify-counterexample", "--graph", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "mutation must be detected");
    assert!(stdout(&out).contains("FAIL"));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn crosscheck_agrees_and_skips_non_cubic() {
    // Heawood (cubic) followed by C6 (non-cubic).
    let heawood = cbg_core::codec::encode_graph6(&cbg_core::constructions::named(
        cbg_core::constructions::Name::Heawood,
    ));
    let c6 = cbg_core::codec::encode_graph6(
        &cbg_core::Graph::build(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap(),
    );
    let input = format!("{}\n{}\n", heawood, c6);
    let out = cbg_with_stdin(&["crosscheck"], &input);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("line 1: agree"));
    assert!(text.contains("line 2: skipped (not cubic)"));
    assert!(text.contains("agreement 1/1 (skipped 1)"));
}

#[test]
fn scan_reports_survivors() {
    let out = cbg(&["scan", "--max-n", "16", "-g", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("# order 14: generated 1 pseudo-2fi 1 survivors 1"));
    assert!(text.contains("# order 16: generated 1 pseudo-2fi 0 survivors 0"));
    let records: Vec<&str> = text
        .lines()
        .filter(|l| !l.starts_with('#'))
        .collect();
    assert_eq!(records.len(), 1, "only the Heawood graph survives");
    assert!(records[0].contains("\t14\t"));
}

#[test]
fn seed_fixtures_writes_all_named_graphs() {
    let dir = std::env::temp_dir().join(format!("cbg-fixtures-{}", std::process::id()));
    let out = cbg(&["--seed-fixtures", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut names: Vec<String> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    assert_eq!(names.len(), 10);
    assert!(names.contains(&"heawood.g6".to_string()));
    assert!(names.contains(&"counterexample_g.adj".to_string()));
    std::fs::remove_dir_all(&dir).ok();
}
