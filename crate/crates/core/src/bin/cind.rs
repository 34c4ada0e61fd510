use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use cind::bench::{run_suites, Suite};
use cind::clawfree::construct_large_two_regular;
use cind::exact::{max_induced_two_regular, SearchBudget};
use cind::families::{
    complete_bipartite, diamond_necklace, random_clawfree_cubic_with_towers, random_cubic_graph,
    random_graph, tightness_graph, Fixture,
};
use cind::graph::io::{emit_edgelist, emit_graph6, parse_edgelist, parse_graph6};
use cind::greedy::{bound_for, greedy_two_regular};
use cind::hardness::reduce_independent_set;
use cind::{is_two_regular_induced, Graph};

const DEFAULT_SEED: u64 = 0;

#[derive(Parser)]
#[command(
    name = "cind",
    version,
    about = "Induced 2-regular subgraphs: solve, bound, construct, reduce"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph: necklace K | tightness K | bipartite K | fixture NAME |
    /// clawfree T D [TOWERS] | cubic N | gnp N P
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        #[arg(long, env = "CIND_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Maximum induced 2-regular subgraph by branch and bound
    Exact {
        file: PathBuf,
        /// Node limit for the search
        #[arg(long)]
        nodes: Option<u64>,
        /// Wall-clock limit in seconds
        #[arg(long)]
        time: Option<f64>,
    },
    /// Shortest-cycle greedy with its lower bound
    Greedy { file: PathBuf },
    /// Constructive solution for claw-free cubic graphs
    Clawfree { file: PathBuf },
    /// Build the max-degree-4 gadget graph of a cubic graph
    Reduce {
        file: PathBuf,
        /// Write the gadget graph here (.g6 or .el) instead of inlining graph6
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that a vertex set induces a 2-regular subgraph
    Verify {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
    },
    /// Run check suites and print a pass/fail table
    Bench {
        /// `all`, a suite name, or its number
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, env = "CIND_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

/// Error with its exit code: 1 for a failed check, 2 for bad input.
struct Failure(u8, String);

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

#[derive(Serialize)]
struct RunReport<T: Serialize> {
    operation: &'static str,
    input: String,
    #[serde(flatten)]
    result: T,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let out = run(cli.command);
    eprintln!("cind: {} ms", start.elapsed().as_millis());
    match out {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("cind: {msg}");
            ExitCode::from(code)
        }
    }
}

fn run(cmd: Command) -> Result<(), Failure> {
    match cmd {
        Command::Gen {
            family,
            params,
            format,
            seed,
        } => {
            let g = generate(&family, &params, seed)?;
            print!("{}", emit(&g, format));
            if matches!(format, Format::Graph6) {
                println!();
            }
            Ok(())
        }
        Command::Exact { file, nodes, time } => {
            let g = load(&file)?;
            let budget = SearchBudget::new(nodes, time).map_err(usage)?;
            let res = max_induced_two_regular(&g, budget);
            eprintln!("exact: size {} optimal {}", res.size(), res.optimal);
            report(
                "exact",
                &file,
                json!({
                    "size": res.size(),
                    "optimal": res.optimal,
                    "cycles": res.certificate.cycles(),
                    "nodes": res.nodes_explored,
                }),
            )
        }
        Command::Greedy { file } => {
            let g = load(&file)?;
            let (cert, trace) = greedy_two_regular(&g);
            let bound = bound_for(&g).ok();
            eprintln!(
                "greedy: size {} in {} steps",
                cert.size(),
                trace.steps.len()
            );
            report(
                "greedy",
                &file,
                json!({
                    "size": cert.size(),
                    "bound_numerator": bound.map(|b| *b.numer()),
                    "bound_denominator": bound.map(|b| *b.denom()),
                    "cycles": cert.cycles(),
                }),
            )
        }
        Command::Clawfree { file } => {
            let g = load(&file)?;
            let res = construct_large_two_regular(&g).map_err(usage)?;
            eprintln!("clawfree: size {} threshold {}", res.size(), res.threshold);
            let surgeries: usize = res.components.iter().map(|c| c.surgeries.len()).sum();
            let pieces: Vec<Value> = res
                .components
                .iter()
                .map(|c| serde_json::to_value(c).expect("report serializes"))
                .collect();
            report(
                "clawfree",
                &file,
                json!({
                    "size": res.size(),
                    "threshold": res.threshold,
                    "cycles": res.certificate.cycles(),
                    "surgeries_applied": surgeries,
                    "pieces": pieces,
                }),
            )?;
            if res.meets_threshold() {
                Ok(())
            } else {
                Err(Failure(1, "result is below the threshold".into()))
            }
        }
        Command::Reduce { file, out } => {
            let g = load(&file)?;
            let map = reduce_independent_set(&g).map_err(usage)?;
            let h = &map.target;
            eprintln!(
                "reduce: H has {} vertices, max degree {}",
                h.order(),
                h.max_degree()
            );
            let mut sidecar = serde_json::to_value(&map).expect("map serializes");
            sidecar["order"] = json!(h.order());
            sidecar["max_degree"] = json!(h.max_degree());
            match &out {
                Some(path) => {
                    let format = format_of(path)?;
                    std::fs::write(path, emit(h, format))
                        .map_err(|e| usage(format!("{}: {e}", path.display())))?;
                    sidecar["graph_file"] = json!(path.display().to_string());
                }
                None => sidecar["graph6"] = json!(emit_graph6(h)),
            }
            report("reduce", &file, sidecar)
        }
        Command::Verify { file, set } => {
            let g = load(&file)?;
            let cert = is_two_regular_induced(&g, &set).map_err(|e| Failure(1, e.to_string()))?;
            report(
                "verify",
                &file,
                json!({
                    "valid": true,
                    "size": cert.size(),
                    "cycles": cert.cycles(),
                }),
            )
        }
        Command::Bench { suite, seed } => {
            let suites = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(usage)?]
            };
            println!("seed {seed}");
            let mut failed = 0;
            for s in suites {
                let r = run_suites(&[s], seed).remove(0);
                failed += usize::from(!r.passed());
                println!("{r}");
            }
            if failed == 0 {
                Ok(())
            } else {
                Err(Failure(1, format!("{failed} suite(s) failed")))
            }
        }
    }
}

fn report(operation: &'static str, file: &Path, result: Value) -> Result<(), Failure> {
    let r = RunReport {
        operation,
        input: file.display().to_string(),
        result,
    };
    println!("{}", serde_json::to_string(&r).expect("report serializes"));
    Ok(())
}

fn format_of(path: &Path) -> Result<Format, Failure> {
    match path.extension().and_then(|e| e.to_str()) {
        Some("g6") => Ok(Format::Graph6),
        Some("el") => Ok(Format::Edgelist),
        _ => Err(usage(format!(
            "{}: expected a .g6 or .el file",
            path.display()
        ))),
    }
}

fn emit(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => emit_graph6(g),
        Format::Edgelist => emit_edgelist(g),
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let format = format_of(path)?;
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let parsed = match format {
        Format::Graph6 => parse_graph6(text.trim()),
        Format::Edgelist => parse_edgelist(&text),
    };
    parsed.map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn generate(family: &str, params: &[String], seed: u64) -> Result<Graph, Failure> {
    let arg = |i: usize| -> Result<&str, Failure> {
        params
            .get(i)
            .map(String::as_str)
            .ok_or_else(|| usage(format!("{family}: missing parameter {}", i + 1)))
    };
    let int = |i: usize| -> Result<usize, Failure> {
        arg(i)?
            .parse()
            .map_err(|e| usage(format!("{family}: parameter {}: {e}", i + 1)))
    };
    let g = match family {
        "necklace" => diamond_necklace(int(0)?).map(|(g, _)| g),
        "tightness" => tightness_graph(int(0)?),
        "bipartite" => Ok(complete_bipartite(int(0)?)),
        "fixture" => arg(0)?.parse::<Fixture>().map(Fixture::graph),
        "clawfree" => {
            let towers = if params.len() > 2 { int(2)? } else { 0 };
            random_clawfree_cubic_with_towers(int(0)?, int(1)?, towers, seed)
        }
        "cubic" => random_cubic_graph(int(0)?, seed),
        "gnp" => {
            let p: f64 = arg(1)?
                .parse()
                .map_err(|e| usage(format!("gnp: probability: {e}")))?;
            random_graph(int(0)?, p, seed)
        }
        other => return Err(usage(format!("unknown family `{other}`"))),
    };
    g.map_err(usage)
}
