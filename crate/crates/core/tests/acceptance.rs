//! End-to-end acceptance checks. Runs as a plain binary so each criterion
//! prints exactly one PASS/FAIL line; exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unionsep::choosability::{decide_choosable, verify_not_choosable, Limits, Status};
use unionsep::constructions::{build_book, build_gadget35};
use unionsep::discharge::{full_audit, golden_diff, parse_golden, Ineq1Verdict, REFERENCE_TABLE};
use unionsep::reducibility::{light_edge_suite, SuiteConfig};
use unionsep::separation::is_valid_assignment;
use unionsep::solver::solve;
use unionsep::sparsity::{mad_bruteforce, mad_exact, verify_mad_charges};
use unionsep::{Graph, Rational, SeparationParams};

use common::{all_graphs, oracle_colorable, oracle_mad, random_graph, random_lists, to_assignment};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:?}, limit {limit:?}"))
}

fn reference_table() -> Check {
    let start = Instant::now();
    let report = full_audit();
    let golden = parse_golden(REFERENCE_TABLE).map_err(|e| e.to_string())?;
    ensure(report.records.len() == 77, || format!("{} tuples", report.records.len()))?;
    ensure(golden.len() == 77, || format!("golden has {} rows", golden.len()))?;
    ensure(
        report.records.iter().all(|r| r.verdict == Ineq1Verdict::FailsIneq1),
        || format!("{} tuples satisfy (1)", report.violations().len()),
    )?;
    let diff = golden_diff(&report, &golden);
    ensure(diff.is_empty(), || diff.join("; "))?;
    within(start, Duration::from_secs(1), "audit")?;
    Ok(format!("77 tuples, golden diff empty, {:?}", start.elapsed()))
}

fn gadget() -> Check {
    let start = Instant::now();
    let inst = build_gadget35();
    let p = SeparationParams::new(3, 5).unwrap();
    ensure(inst.graph.n() == 47 && inst.graph.m() == 126, || {
        format!("n = {}, m = {}", inst.graph.n(), inst.graph.m())
    })?;
    is_valid_assignment(&inst.graph, &inst.lists, p).map_err(|v| v.to_string())?;
    let r = solve(&inst.graph, &inst.lists);
    ensure(!r.is_sat(), || "solver found a coloring".into())?;
    within(start, Duration::from_secs(10), "gadget")?;
    Ok(format!("47/126, valid, UNSAT after {} nodes, {:?}", r.nodes_explored, start.elapsed()))
}

fn books() -> Check {
    let mut notes = Vec::new();
    for (k, t) in [(2, 3), (2, 4), (3, 5), (3, 6)] {
        let start = Instant::now();
        let inst = build_book(k, t).map_err(|e| e.to_string())?;
        let b = t - k + 1;
        let tuples = b.pow(k as u32);
        let g = &inst.graph;
        ensure(g.n() == k + tuples && g.m() == k * tuples, || {
            format!("({k},{t}): n = {}, m = {}", g.n(), g.m())
        })?;
        let p = SeparationParams::new(k, t).unwrap();
        is_valid_assignment(g, &inst.lists, p).map_err(|v| format!("({k},{t}): {v}"))?;
        let r = solve(g, &inst.lists);
        ensure(!r.is_sat(), || format!("({k},{t}) is colorable"))?;
        let expected = Rational::new((2 * k * tuples) as i64, (k + tuples) as i64);
        let avg = g.average_degree().map_err(|e| e.to_string())?;
        ensure(avg == expected, || format!("({k},{t}): average degree {avg} != {expected}"))?;
        within(start, Duration::from_secs(5), &format!("book ({k},{t})"))?;
        notes.push(format!("({k},{t}) n={} avg={avg}", g.n()));
    }
    Ok(notes.join(", "))
}

fn charges() -> Check {
    let start = Instant::now();
    let mut count = 0;
    for k in 2..=6usize {
        for t in 2 * k - 1..=30 {
            let rep = verify_mad_charges(k, t).map_err(|e| e.to_string())?;
            ensure(rep.passed(), || rep.to_string())?;
            let c = rep.c_threshold;
            let t1 = Rational::from((t + 1) as i64);
            let lhs = t1 * (t1 - c * 2);
            let rhs = Rational::from(((t + 1) as i64 - 2 * k as i64).pow(2));
            ensure(lhs == rhs, || format!("({k},{t}): {lhs} != {rhs}"))?;
            count += 1;
        }
    }
    let c = verify_mad_charges(4, 15).map_err(|e| e.to_string())?.c_threshold;
    ensure(c == Rational::from(6), || format!("c(4,15) = {c}"))?;
    within(start, Duration::from_secs(1), "charge grid")?;
    Ok(format!("{count} parameter pairs, c(4,15) = 6, {:?}", start.elapsed()))
}

fn mad() -> Check {
    let start = Instant::now();
    let named = [
        ("K5", Graph::complete(5), 4),
        ("Petersen", Graph::petersen(), 3),
        ("C5", Graph::cycle(5), 2),
    ];
    for (name, g, want) in named {
        let got = mad_exact(&g).map_err(|e| e.to_string())?.value;
        ensure(got == Rational::from(want), || format!("Mad({name}) = {got}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..100 {
        let n = rng.gen_range(1..=9);
        let p = rng.gen_range(0.1..0.9);
        let g = random_graph(&mut rng, n, p);
        let exact = mad_exact(&g).map_err(|e| e.to_string())?.value;
        let brute = mad_bruteforce(&g).map_err(|e| e.to_string())?.value;
        ensure(exact == brute && brute == oracle_mad(&g), || {
            format!("graph {i}: exact {exact}, brute force {brute}")
        })?;
    }
    within(start, Duration::from_secs(30), "mad")?;
    Ok(format!("named graphs and 100 random graphs agree, {:?}", start.elapsed()))
}

fn choosability() -> Check {
    let limits = Limits::default();
    let cases = [
        ("C4", Graph::cycle(4), (2, 2), Status::Choosable),
        ("C6", Graph::cycle(6), (2, 2), Status::Choosable),
        ("C3", Graph::cycle(3), (2, 2), Status::NotChoosable),
        ("C5", Graph::cycle(5), (2, 2), Status::NotChoosable),
        ("K2,4", Graph::complete_bipartite(2, 4), (2, 3), Status::NotChoosable),
        ("K4", Graph::complete(4), (3, 3), Status::NotChoosable),
    ];
    let mut notes = Vec::new();
    for (name, g, (k, t), want) in cases {
        let p = SeparationParams::new(k, t).unwrap();
        let v = decide_choosable(&g, p, limits).map_err(|e| e.to_string())?;
        ensure(v.status == want, || format!("{name} at {p}: {:?}", v.status))?;
        if want == Status::NotChoosable {
            let w = v.witness.as_ref().ok_or("missing witness")?;
            ensure(verify_not_choosable(&g, w, p), || format!("{name} witness fails"))?;
        }
        notes.push(format!("{name}:{}", v.nodes));
    }
    Ok(format!("all six verdicts as expected (nodes {})", notes.join(" ")))
}

fn light_edge() -> Check {
    let start = Instant::now();
    let cfg = SuiteConfig::default();
    let rep = light_edge_suite(&cfg).map_err(|e| e.to_string())?;
    ensure(rep.hypothesis_met >= 1000, || format!("only {} instances", rep.hypothesis_met))?;
    ensure(rep.critical_faults.is_empty(), || {
        format!("critical faults at {:?}", rep.critical_faults)
    })?;
    within(start, Duration::from_secs(60), "suite")?;
    Ok(format!(
        "{} instances, 0 faults, {} tight, {:?}",
        rep.hypothesis_met,
        rep.tight,
        start.elapsed()
    ))
}

fn solver_oracle() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut checked = 0u64;
    let mut sat = 0u64;
    for n in 1..=5 {
        for g in all_graphs(n) {
            for _ in 0..500 {
                let universe = rng.gen_range(1..=6);
                let raw = random_lists(&mut rng, n, 3, universe);
                let lists = to_assignment(&raw, universe);
                let r = solve(&g, &lists);
                let want = oracle_colorable(&g, &raw);
                ensure(r.is_sat() == want, || format!("{g:?} {raw:?}: solver {}", r.is_sat()))?;
                if let Some(c) = &r.witness {
                    unionsep::separation::is_proper_coloring(&g, &lists, c)
                        .map_err(|e| format!("bad witness: {e:?}"))?;
                    sat += 1;
                }
                checked += 1;
            }
        }
    }
    within(start, Duration::from_secs(30), "solver oracle")?;
    Ok(format!("{checked} instances ({sat} SAT) agree, {:?}", start.elapsed()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 tuple audit", reference_table),
        ("2 (3,5) gadget", gadget),
        ("3 book graphs", books),
        ("4 charge algebra", charges),
        ("5 mad oracle", mad),
        ("6 choosability verdicts", choosability),
        ("7 light-edge suite", light_edge),
        ("8 solver completeness", solver_oracle),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(note) => println!("PASS criterion {name}: {note}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
