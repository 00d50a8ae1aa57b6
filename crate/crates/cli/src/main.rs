use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use spacking::constructive::{lift_subdivision, ConstructError, Method, Mode};
use spacking::enumerate::{enumerate_cubic, filter_bipartite, Provider};
use spacking::graph6::{parse_graph6, write_graph6};
use spacking::named::named_graph;
use spacking::screen::{screen, Question};
use spacking::solver::{
    decide_with, packing_chromatic, verify_coloring, Budget, Outcome, PackingChromatic,
    SolverOptions,
};
use spacking::table::{build_table, TableFormat};
use spacking::{Graph, SSequence};

const EXIT_ERROR: u8 = 3;
const EXIT_CASE_FAILURE: u8 = 4;

#[derive(Parser)]
#[command(name = "spacking", version, about = "S-packing colorings of subcubic graphs")]
struct Cli {
    /// Worker threads for table and screen (default: all cores).
    #[arg(long, global = true, env = "SPACKING_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a graph is S-colorable. Exit 0 sat, 1 unsat, 2 unknown.
    Decide {
        /// graph6 string, or @name for a fixture (@petersen, @sub(k4), @cycle(5), ...).
        #[arg(long)]
        graph: String,
        #[arg(long)]
        sequence: SSequence,
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Time limit in seconds.
        #[arg(long)]
        time_limit: Option<f64>,
        #[arg(long)]
        no_symmetry_breaking: bool,
    },
    /// Count cubic graphs of each order by chromatic length in a family.
    Table {
        #[arg(long)]
        family: SSequence,
        #[arg(long)]
        max_n: usize,
        /// `generate` or `catalog:FILE` (graph6, one graph per line).
        #[arg(long, default_value = "generate", value_parser = parse_provider)]
        provider: Provider,
        #[arg(long, default_value = "text")]
        format: TableFormat,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Look for counterexamples to an open question among small cubic graphs.
    Screen {
        /// 1123, 122222, 1223-irregular, 113-irregular, 12345-subdivision or packing-13.
        #[arg(long)]
        question: Question,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "generate", value_parser = parse_provider)]
        provider: Provider,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Color a graph with one of the constructive methods.
    Construct {
        /// lift, s1333, 12x6, 1222, 11223 or 112.
        #[arg(long)]
        method: String,
        #[arg(long)]
        graph: String,
        /// For `lift`: the sequence of the input coloring.
        #[arg(long)]
        sequence: Option<SSequence>,
        /// For `lift`: a witness JSON file; found with the solver when omitted.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Report case failures instead of falling back to the solver.
        #[arg(long)]
        strict: bool,
        /// Write the replay log as JSON to this file.
        #[arg(long)]
        replay: Option<PathBuf>,
    },
    /// Convert between graph6 and edge lists (`N u-v u-v ...`), one graph per line.
    Convert {
        #[arg(long, value_enum)]
        from: GraphFormat,
        #[arg(long, value_enum)]
        to: GraphFormat,
        /// Input file (default: stdin).
        input: Option<PathBuf>,
    },
    /// Print the connected cubic graphs of order N as graph6.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bipartite: bool,
    },
    /// Packing chromatic number, i.e. the shortest (1,2,...,k) that colors the graph.
    Packing {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        max_nodes: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
}

fn parse_provider(s: &str) -> Result<Provider, String> {
    match s.strip_prefix("catalog:") {
        Some(path) if !path.is_empty() => Ok(Provider::Catalog(PathBuf::from(path))),
        Some(_) => Err("catalog:FILE needs a path".into()),
        None if s == "generate" => Ok(Provider::Generate),
        None => Err(format!("unknown provider `{s}` (generate or catalog:FILE)")),
    }
}

fn load_graph(spec: &str) -> Result<Graph> {
    match spec.strip_prefix('@') {
        Some(name) => Ok(named_graph(name)?),
        None => parse_graph6(spec.trim().as_bytes()).with_context(|| format!("cannot parse graph `{spec}`")),
    }
}

fn options(max_nodes: Option<u64>, time_limit: Option<f64>) -> SolverOptions {
    SolverOptions::with_budget(Budget {
        max_nodes,
        time_limit: time_limit.map(Duration::from_secs_f64),
    })
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global()
            .context("cannot start worker pool")?;
    }
    match cli.command {
        Command::Decide { graph, sequence, max_nodes, time_limit, no_symmetry_breaking } => {
            let g = load_graph(&graph)?;
            let opts = SolverOptions {
                symmetry_breaking: !no_symmetry_breaking,
                ..options(max_nodes, time_limit)
            };
            let d = decide_with(&g, &sequence, &opts);
            let witness = match &d.outcome {
                Outcome::Sat(c) => Some(c.to_witness(&sequence)),
                _ => None,
            };
            print_json(&json!({
                "graph6": write_graph6(&g),
                "sequence": sequence,
                "verdict": d.outcome.verdict(),
                "witness": witness,
                "nodes": d.stats.nodes,
            }))?;
            Ok(match d.outcome {
                Outcome::Sat(_) => 0,
                Outcome::Unsat => 1,
                Outcome::Unknown => 2,
            })
        }
        Command::Table { family, max_n, provider, format, max_nodes } => {
            if matches!(provider, Provider::Generate) && max_n > spacking::enumerate::MAX_GENERATED_ORDER {
                bail!("generated tables stop at order {}", spacking::enumerate::MAX_GENERATED_ORDER);
            }
            let table = build_table(&family, max_n, &provider, &options(max_nodes, None))?;
            log::info!(
                "{} graphs in {:.2?}, {} search nodes",
                table.metadata.graphs,
                table.metadata.elapsed,
                table.metadata.solver_nodes
            );
            print!("{}", table.render(format));
            Ok(0)
        }
        Command::Screen { question, max_n, provider, max_nodes } => {
            let report = screen(question, max_n, &provider, &options(max_nodes, None))?;
            print_json(&serde_json::to_value(&report)?)?;
            Ok(if report.complete { 0 } else { 2 })
        }
        Command::Construct { method, graph, sequence, coloring, strict, replay } => {
            let g = load_graph(&graph)?;
            let mode = if strict { Mode::Strict } else { Mode::Lenient };
            let (target, result) = if method == "lift" {
                let s = sequence.ok_or_else(|| anyhow!("lift needs --sequence"))?;
                let c = match coloring {
                    Some(path) => {
                        let text = std::fs::read_to_string(&path)
                            .with_context(|| format!("cannot read {}", path.display()))?;
                        let w: spacking::solver::Witness = serde_json::from_str(&text)?;
                        if w.sequence != s {
                            bail!("witness sequence {} differs from --sequence {s}", w.sequence);
                        }
                        w.coloring()
                    }
                    None => match decide_with(&g, &s, &SolverOptions::default()).outcome {
                        Outcome::Sat(c) => c,
                        _ => bail!("graph is not {s}-colorable"),
                    },
                };
                (g.subdivide(), lift_subdivision(&g, &s, &c))
            } else {
                let m = Method::from_name(&method).ok_or_else(|| {
                    anyhow!("unknown method `{method}` (lift, s1333, 12x6, 1222, 11223, 112)")
                })?;
                let target = if m == Method::Subdivided1333 { g.subdivide() } else { g.clone() };
                (target, m.run(&g, mode))
            };
            let out = match result {
                Ok(out) => out,
                Err(e @ ConstructError::CaseFailure { .. }) => {
                    eprintln!("error: {e}");
                    return Ok(EXIT_CASE_FAILURE);
                }
                Err(e) => return Err(e.into()),
            };
            let violations = verify_coloring(&target, &out.sequence, out.main())?;
            if !violations.is_empty() || !out.main().is_total() {
                bail!("construction produced an invalid coloring");
            }
            if let Some(reason) = &out.fallback {
                log::warn!("case analysis failed, solver fallback used: {reason}");
            }
            if let Some(path) = replay {
                std::fs::write(&path, serde_json::to_string_pretty(&out.replay)? + "\n")
                    .with_context(|| format!("cannot write {}", path.display()))?;
            }
            print_json(&json!({
                "method": method,
                "graph6": write_graph6(&target),
                "witness": out.main().to_witness(&out.sequence),
                "subsidiary": out.coloring.subsidiary,
                "fallback": out.fallback,
            }))?;
            Ok(0)
        }
        Command::Convert { from, to, input } => {
            let reader: Box<dyn BufRead> = match input {
                Some(path) => Box::new(io::BufReader::new(
                    std::fs::File::open(&path).with_context(|| format!("cannot open {}", path.display()))?,
                )),
                None => Box::new(io::stdin().lock()),
            };
            let mut out = io::stdout().lock();
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                let line = line.trim();
                if line.is_empty() || line.starts_with(">>graph6<<") && line.len() == 10 {
                    continue;
                }
                let g = match from {
                    GraphFormat::Graph6 => parse_graph6(line.trim_start_matches(">>graph6<<").as_bytes())
                        .with_context(|| format!("line {}", i + 1))?,
                    GraphFormat::Edges => parse_edges(line).with_context(|| format!("line {}", i + 1))?,
                };
                match to {
                    GraphFormat::Graph6 => writeln!(out, "{}", write_graph6(&g))?,
                    GraphFormat::Edges => writeln!(out, "{}", format_edges(&g))?,
                }
            }
            Ok(0)
        }
        Command::Enumerate { n, bipartite } => {
            let graphs = enumerate_cubic(n)?;
            let mut out = io::stdout().lock();
            let graphs: Box<dyn Iterator<Item = Graph>> = if bipartite {
                Box::new(filter_bipartite(graphs))
            } else {
                Box::new(graphs.into_iter())
            };
            for g in graphs {
                writeln!(out, "{}", write_graph6(&g))?;
            }
            Ok(0)
        }
        Command::Packing { graph, max_nodes } => {
            let g = load_graph(&graph)?;
            let (exact, value) = match packing_chromatic(&g, &options(max_nodes, None)) {
                PackingChromatic::Exact(k) => (true, k),
                PackingChromatic::AtLeast(k) => (false, k),
            };
            print_json(&json!({ "graph6": write_graph6(&g), "packing_chromatic": value, "exact": exact }))?;
            Ok(if exact { 0 } else { 2 })
        }
    }
}

fn parse_edges(line: &str) -> Result<Graph> {
    let mut parts = line.split_whitespace();
    let n: usize = parts.next().ok_or_else(|| anyhow!("empty line"))?.parse()?;
    let edges = parts
        .map(|p| {
            let (u, v) = p.split_once('-').ok_or_else(|| anyhow!("edge `{p}` is not u-v"))?;
            Ok((u.parse()?, v.parse()?))
        })
        .collect::<Result<Vec<(usize, usize)>>>()?;
    Ok(Graph::new(n, &edges)?)
}

fn format_edges(g: &Graph) -> String {
    let mut s = g.n().to_string();
    for (u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}
