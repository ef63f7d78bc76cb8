use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use unionsep::choosability::{decide_choosable, verify_not_choosable, Limits, Status};
use unionsep::constructions::{build_book, build_gadget35, ConstructedInstance};
use unionsep::discharge::{full_audit, golden_diff, parse_golden, REFERENCE_TABLE};
use unionsep::reducibility::{find_reducible_edges, greedy_kernel, light_edge_suite, SuiteConfig};
use unionsep::separation::{is_proper_coloring, is_valid_assignment};
use unionsep::solver::solve;
use unionsep::sparsity::{mad_exact, verify_mad_charges};
use unionsep::textio::{emit_graph, emit_lists, parse_graph, parse_lists};
use unionsep::{Graph, ListAssignment, SeparationParams};

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const LIMIT: u8 = 3;

#[derive(Parser)]
#[command(version, about = "List coloring with separation: solve, decide, construct, audit")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Human, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    /// One `key=value` pair per line.
    Machine,
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    t: usize,
}

impl Params {
    fn get(&self) -> Result<SeparationParams, Failure> {
        SeparationParams::new(self.k, self.t).map_err(Failure::usage)
    }
}

#[derive(Args)]
struct ListInput {
    /// Graph file: `n m` header, then one `u v` line per edge.
    graph: PathBuf,
    /// List file: one `v: c1 c2 ...` line per vertex.
    lists: PathBuf,
    /// Size of the color universe (default: 1 + largest color).
    #[arg(long)]
    universe: Option<usize>,
}

impl ListInput {
    fn load(&self) -> Result<(Graph, ListAssignment), Failure> {
        let g = load_graph(&self.graph)?;
        let text = read(&self.lists)?;
        let lists = parse_lists(&text, g.n(), self.universe).map_err(|e| {
            Failure::usage(format!("{}: {e}", self.lists.display()))
        })?;
        Ok((g, lists))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Find an L-coloring or prove none exists.
    Solve {
        #[command(flatten)]
        input: ListInput,
        /// Write the coloring, one `v: c` line per vertex.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
    /// Decide (k,t)-choosability by exhaustive enumeration.
    CheckChoosable {
        graph: PathBuf,
        #[command(flatten)]
        params: Params,
        #[arg(long, default_value_t = 10_000_000)]
        max_nodes: u64,
        #[arg(long)]
        max_seconds: Option<f64>,
        /// Enumerate on the whole graph instead of its degree-k kernel.
        #[arg(long)]
        no_kernel: bool,
        /// Write the bad list assignment when one is found.
        #[arg(long)]
        emit_witness: Option<PathBuf>,
    },
    /// Check that a list assignment is a valid (k,t)-assignment with no coloring.
    VerifyWitness {
        #[command(flatten)]
        input: ListInput,
        #[command(flatten)]
        params: Params,
    },
    /// Build a graph together with a list assignment that cannot be colored.
    Construct {
        #[command(subcommand)]
        kind: Construction,
        #[arg(long, global = true)]
        graph_out: Option<PathBuf>,
        #[arg(long, global = true)]
        lists_out: Option<PathBuf>,
    },
    /// Exact maximum average degree.
    Mad { graph: PathBuf },
    /// Check the charge arithmetic behind the Mad bound for (k,t).
    VerifySparse {
        #[command(flatten)]
        params: Params,
    },
    /// List edges uv with d(u) + d(v) <= t + min(|N(u) ∩ N(v)|, 2).
    FindReducible {
        graph: PathBuf,
        #[command(flatten)]
        params: Params,
    },
    /// Peel vertices of degree below k; report what remains.
    Kernel {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Enumerate the degree tuples and check each fails inequality (1).
    AuditTuples {
        /// Reference table to compare against (default: the built-in one).
        #[arg(long)]
        golden: Option<PathBuf>,
    },
    /// Randomized check of the light-edge reduction.
    LightEdgeSuite {
        #[arg(long, default_value_t = SuiteConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, default_value_t = 5)]
        t_min: usize,
        #[arg(long, default_value_t = 8)]
        t_max: usize,
    },
}

#[derive(Subcommand)]
enum Construction {
    /// The bipartite book graph for (k,t).
    Book {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
    },
    /// The 47-vertex (3,5) construction.
    Gadget35,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(e: impl ToString) -> Self {
        Failure {
            code: USAGE,
            message: e.to_string(),
        }
    }
}

/// What a subcommand prints: ordered key/value pairs, plus free text that
/// only the human format shows.
#[derive(Default)]
struct Report {
    fields: Vec<(String, String)>,
    text: String,
}

impl Report {
    fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    fn print(&self, format: Format) {
        match format {
            Format::Human => {
                print!("{}", self.text);
                for (k, v) in &self.fields {
                    println!("{k}: {v}");
                }
            }
            Format::Machine => {
                for (k, v) in &self.fields {
                    println!("{k}={v}");
                }
            }
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn run(cmd: Command, out: &mut Report) -> Result<u8, Failure> {
    match cmd {
        Command::Solve {
            input,
            emit_witness,
        } => {
            let (g, lists) = input.load()?;
            let r = solve(&g, &lists);
            out.field("verdict", if r.is_sat() { "SAT" } else { "UNSAT" });
            out.field("nodes", r.nodes_explored);
            let Some(c) = r.witness else {
                return Ok(NEGATIVE);
            };
            debug_assert!(is_proper_coloring(&g, &lists, &c).is_ok());
            let colors: Vec<String> = c.0.iter().map(|x| x.to_string()).collect();
            out.field("coloring", colors.join(" "));
            if let Some(path) = emit_witness {
                let mut s = String::new();
                for (v, x) in c.0.iter().enumerate() {
                    let _ = writeln!(s, "{v}: {x}");
                }
                write(&path, &s)?;
            }
            Ok(OK)
        }
        Command::CheckChoosable {
            graph,
            params,
            max_nodes,
            max_seconds,
            no_kernel,
            emit_witness,
        } => {
            let g = load_graph(&graph)?;
            let p = params.get()?;
            if max_nodes == 0 {
                return Err(Failure::usage("--max-nodes must be positive"));
            }
            let max_duration = match max_seconds {
                Some(s) if !(s > 0.0 && s.is_finite()) => {
                    return Err(Failure::usage("--max-seconds must be positive"))
                }
                s => s.map(Duration::from_secs_f64),
            };
            let limits = Limits {
                max_nodes: Some(max_nodes),
                max_duration,
                kernelize: !no_kernel,
            };
            let v = decide_choosable(&g, p, limits).map_err(Failure::usage)?;
            let status = match v.status {
                Status::Choosable => "CHOOSABLE",
                Status::NotChoosable => "NOT_CHOOSABLE",
                Status::ResourceLimit => "RESOURCE_LIMIT",
            };
            out.field("params", p);
            out.field("verdict", status);
            out.field("nodes", v.nodes);
            out.field("assignments_tested", v.assignments_tested);
            if let Some(w) = &v.witness {
                out.text.push_str(&emit_lists(w));
                if let Some(path) = emit_witness {
                    write(&path, &emit_lists(w))?;
                }
            }
            Ok(match v.status {
                Status::Choosable => OK,
                Status::NotChoosable => NEGATIVE,
                Status::ResourceLimit => LIMIT,
            })
        }
        Command::VerifyWitness { input, params } => {
            let (g, lists) = input.load()?;
            let p = params.get()?;
            let valid = is_valid_assignment(&g, &lists, p);
            out.field("valid", valid.is_ok());
            if let Err(why) = &valid {
                out.field("violation", why);
            }
            let colorable = solve(&g, &lists).is_sat();
            out.field("colorable", colorable);
            let ok = verify_not_choosable(&g, &lists, p);
            out.field("verdict", verdict(ok));
            Ok(if ok { OK } else { NEGATIVE })
        }
        Command::Construct {
            kind,
            graph_out,
            lists_out,
        } => {
            let inst: ConstructedInstance = match kind {
                Construction::Book { k, t } => build_book(k, t).map_err(Failure::usage)?,
                Construction::Gadget35 => build_gadget35(),
            };
            let (gtext, ltext) = (emit_graph(&inst.graph), emit_lists(&inst.lists));
            match &graph_out {
                Some(path) => write(path, &gtext)?,
                None => out.text.push_str(&gtext),
            }
            match &lists_out {
                Some(path) => write(path, &ltext)?,
                None => out.text.push_str(&ltext),
            }
            out.field("params", inst.params);
            out.field("built_for_t", inst.built_for_t);
            out.field("n", inst.graph.n());
            out.field("m", inst.graph.m());
            Ok(OK)
        }
        Command::Mad { graph } => {
            let g = load_graph(&graph)?;
            let r = mad_exact(&g).map_err(Failure::usage)?;
            out.field("mad", r.value);
            let ids: Vec<String> = r.witness.iter().map(|v| v.to_string()).collect();
            out.field("witness", ids.join(" "));
            Ok(OK)
        }
        Command::VerifySparse { params } => {
            let rep = verify_mad_charges(params.k, params.t).map_err(Failure::usage)?;
            let _ = writeln!(out.text, "{rep}");
            out.field("k", rep.k);
            out.field("t", rep.t);
            out.field("threshold", rep.c_threshold);
            for c in &rep.checks {
                out.field(c.name, verdict(c.passed));
            }
            out.field("verdict", verdict(rep.passed()));
            Ok(if rep.passed() { OK } else { NEGATIVE })
        }
        Command::FindReducible { graph, params } => {
            let g = load_graph(&graph)?;
            let rep = find_reducible_edges(&g, params.get()?).map_err(Failure::usage)?;
            out.field("count", rep.edges.len());
            for e in &rep.edges {
                out.field(
                    "edge",
                    format_args!("{} {} common={} degree_sum={}", e.u, e.v, e.common, e.degree_sum),
                );
            }
            Ok(OK)
        }
        Command::Kernel { graph, k } => {
            let g = load_graph(&graph)?;
            let kernel = greedy_kernel(&g, k);
            let join = |xs: &[usize]| xs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            out.field("kernel_size", kernel.kernel.len());
            out.field("kernel", join(&kernel.kernel));
            out.field("removal_order", join(&kernel.order));
            Ok(OK)
        }
        Command::AuditTuples { golden } => {
            let report = full_audit();
            let text = match &golden {
                Some(path) => read(path)?,
                None => REFERENCE_TABLE.to_string(),
            };
            let rows = parse_golden(&text).map_err(Failure::usage)?;
            let diff = golden_diff(&report, &rows);
            out.text.push_str(&report.table());
            for d in &diff {
                let _ = writeln!(out.text, "mismatch: {d}");
            }
            let ok = report.passed() && diff.is_empty();
            out.field("tuples", report.records.len());
            out.field("failing_ineq1", report.failing_count());
            out.field("golden_mismatches", diff.len());
            out.field("verdict", verdict(ok));
            Ok(if ok { OK } else { NEGATIVE })
        }
        Command::LightEdgeSuite {
            seed,
            instances,
            max_n,
            k,
            t_min,
            t_max,
        } => {
            let cfg = SuiteConfig {
                seed,
                instances,
                max_n,
                k,
                t_min,
                t_max,
            };
            let rep = light_edge_suite(&cfg).map_err(Failure::usage)?;
            out.field("seed", seed);
            out.field("generated", rep.generated);
            out.field("hypothesis_met", rep.hypothesis_met);
            out.field("passes", rep.passes);
            out.field("tight", rep.tight);
            out.field("critical_faults", rep.critical_faults.len());
            for i in &rep.critical_faults {
                out.field("fault_instance", i);
            }
            let ok = rep.critical_faults.is_empty();
            out.field("verdict", verdict(ok));
            Ok(if ok { OK } else { NEGATIVE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Report::default();
    match run(cli.command, &mut out) {
        Ok(code) => {
            out.print(cli.format);
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
