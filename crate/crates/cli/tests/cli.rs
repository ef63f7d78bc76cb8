use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use unionsep::constructions::build_gadget35;
use unionsep::textio::{parse_graph, parse_lists};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_unionsep"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn audit_prints_every_row() {
    let o = run(&["audit-tuples"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.contains(" fails (1) for d(v) ≥ ")).count(), 77);
    assert!(out.contains("(0,0,0,3) fails (1) for d(v) ≥ 9."));
    assert!(out.contains("verdict: PASS"));
}

#[test]
fn audit_against_a_wrong_table_fails() {
    let dir = tempfile::tempdir().unwrap();
    let golden = dir.path().join("golden.txt");
    fs::write(&golden, "(0,0,0,0) fails (1) for d(v) >= 7.\n").unwrap();
    let o = run(&["audit-tuples", "--golden", path(&golden), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict=FAIL"));
}

#[test]
fn gadget_files_are_unsat_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l) = (dir.path().join("g.txt"), dir.path().join("l.txt"));
    let o = run(&["construct", "gadget35", "--graph-out", path(&g), "--lists-out", path(&l)]);
    assert_eq!(o.status.code(), Some(0));

    let inst = build_gadget35();
    let graph = parse_graph(&fs::read_to_string(&g).unwrap()).unwrap();
    assert_eq!(graph, inst.graph);
    let lists = parse_lists(&fs::read_to_string(&l).unwrap(), graph.n(), None).unwrap();
    assert_eq!(lists.lists(), inst.lists.lists());

    let o = run(&["solve", path(&g), path(&l), "--format", "machine"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("verdict=UNSAT"));

    let o = run(&["verify-witness", path(&g), path(&l), "--k", "3", "--t", "5"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn sparse_bound_for_4_15() {
    let o = run(&["verify-sparse", "--k", "4", "--t", "15", "--format", "machine"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("threshold=6\n"));
    assert!(out.contains("verdict=PASS"));
}

#[test]
fn solve_writes_a_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let (g, l, w) = (dir.path().join("g"), dir.path().join("l"), dir.path().join("w"));
    fs::write(&g, "3 2\n0 1\n1 2\n").unwrap();
    fs::write(&l, "0: 0 1\n1: 0\n2: 0 2\n").unwrap();
    let o = run(&["solve", path(&g), path(&l), "--emit-witness", path(&w)]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&w).unwrap(), "0: 1\n1: 0\n2: 2\n");
}

#[test]
fn choosability_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (c4, k24, w) = (dir.path().join("c4"), dir.path().join("k24"), dir.path().join("w"));
    fs::write(&c4, "4 4\n0 1\n1 2\n2 3\n0 3\n").unwrap();
    let o = run(&["construct", "book", "--k", "2", "--t", "3", "--graph-out", path(&k24), "--lists-out", path(&w)]);
    assert_eq!(o.status.code(), Some(0));

    assert_eq!(run(&["check-choosable", path(&c4), "--k", "2", "--t", "2"]).status.code(), Some(0));
    let o = run(&["check-choosable", path(&k24), "--k", "2", "--t", "3", "--emit-witness", path(&w)]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["verify-witness", path(&k24), path(&w), "--k", "2", "--t", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["check-choosable", path(&k24), "--k", "2", "--t", "3", "--max-nodes", "3"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("loop");
    fs::write(&g, "2 1\n0 0\n").unwrap();
    let o = run(&["mad", path(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(run(&["find-reducible", path(&g), "--k", "3"]).status.code(), Some(2));
}

#[test]
fn machine_output_is_stable() {
    let args = ["light-edge-suite", "--instances", "50", "--seed", "7", "--format", "machine"];
    let a = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&run(&args)));
}

#[test]
fn mad_kernel_and_reducible_edges() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k5");
    let edges: String = (0..5).flat_map(|u| (u + 1..5).map(move |v| format!("{u} {v}\n"))).collect();
    fs::write(&g, format!("5 10\n{edges}")).unwrap();
    let o = run(&["mad", path(&g), "--format", "machine"]);
    assert!(stdout(&o).starts_with("mad=4\n"));
    let o = run(&["kernel", path(&g), "--k", "5", "--format", "machine"]);
    assert!(stdout(&o).contains("kernel_size=0"));
    let o = run(&["find-reducible", path(&g), "--k", "3", "--t", "6", "--format", "machine"]);
    assert!(stdout(&o).contains("count=10"));
}
