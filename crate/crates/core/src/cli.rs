//! Command-line front end.
//!
//! Exit codes: 0 proved optimal (or valid cover for `verify`), 1 input error
//! (or not a cover for `verify`), 2 budget expired with a valid incumbent.

use std::fs::File;
use std::io::BufWriter;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use crate::branch::{Heuristic, HeuristicChoice};
use crate::error::{Error, Result};
use crate::io::{self, GraphFileSpec, GraphFormat, Indexing, LoadedGraph, WeightSource};
use crate::oracle::brute_force_mwvc;
use crate::reduce::{reduce, ReduceOptions};
use crate::report::{self, OutputFormat, ReduceReport, RunReport};
use crate::search::{solve, ResourceBudget, SolveOptions};

pub const EXIT_OPTIMAL: u8 = 0;
pub const EXIT_INPUT_ERROR: u8 = 1;
pub const EXIT_BUDGET_EXPIRED: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "mwvc",
    version,
    about = "Exact minimum weight vertex cover for sparse graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce, split into components and search each one to optimality.
    Solve(SolveArgs),
    /// Apply the reduction rules only.
    Reduce(ReduceArgs),
    /// Exhaustive search (at most 20 vertices).
    Oracle(OracleArgs),
    /// Check that a solution file covers every edge.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Graph file.
    pub graph: PathBuf,

    /// edge-list, matrix-market or dimacs; detected when omitted.
    #[arg(long)]
    pub format: Option<GraphFormat>,

    /// Weight scheme (i-mod-200, i-mod-200-zero-based, uniform:K), in-file,
    /// auto, or a path to a weight file with one integer per line.
    #[arg(long, default_value = "auto")]
    pub weights: WeightSource,

    /// Vertex ids in the input start at 0 instead of 1.
    #[arg(long)]
    pub zero_based: bool,

    /// Minimum vertex count, for edge lists with trailing isolated vertices.
    #[arg(long)]
    pub vertices: Option<usize>,
}

impl InputArgs {
    fn spec(&self) -> GraphFileSpec {
        GraphFileSpec {
            path: self.graph.clone(),
            format: self.format,
            indexing: Some(if self.zero_based {
                Indexing::ZeroBased
            } else {
                Indexing::OneBased
            }),
            weights: self.weights.clone(),
            vertices: self.vertices,
        }
    }

    fn load(&self) -> Result<LoadedGraph> {
        io::parse_graph(&self.spec())
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, default_value = "h1")]
    pub heuristic: Heuristic,

    /// Seed for the h2 heuristic.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,

    /// Search-node limit per component.
    #[arg(long)]
    pub node_limit: Option<u64>,

    /// Skip the reduction rules.
    #[arg(long)]
    pub no_reductions: bool,

    /// Also take zero-weight vertices during reduction.
    #[arg(long)]
    pub zero_weight_rule: bool,

    /// Search independent components on a thread pool.
    #[arg(long)]
    pub parallel_components: bool,

    /// Reduce only at the root and never split a search node into components.
    #[arg(long)]
    pub plain_search: bool,

    #[arg(long, default_value = "text")]
    pub output: OutputFormat,

    /// Write the cover, one vertex per line.
    #[arg(long)]
    pub solution_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ReduceArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long)]
    pub zero_weight_rule: bool,

    #[arg(long, default_value = "text")]
    pub output: OutputFormat,

    /// Write the reduced graph as weighted DIMACS.
    #[arg(long)]
    pub graph_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long, default_value = "text")]
    pub output: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Solution file, one vertex per line, same indexing as the graph.
    pub cover: PathBuf,
}

fn solve_options(args: &SolveArgs) -> Result<SolveOptions> {
    let time_limit = match args.time_limit {
        Some(t) if !(t.is_finite() && t >= 0.0) => {
            return Err(Error::Input {
                path: args.input.graph.clone(),
                message: format!("invalid time limit {t}"),
            })
        }
        Some(t) => Some(Duration::from_secs_f64(t)),
        None => None,
    };
    Ok(SolveOptions {
        heuristic: HeuristicChoice::new(args.heuristic, args.seed),
        budget: ResourceBudget {
            time_limit,
            node_limit: args.node_limit,
        },
        reductions: !args.no_reductions,
        zero_weight_rule: args.zero_weight_rule,
        parallel_components: args.parallel_components,
        use_lower_bound: true,
        in_search_reductions: !args.plain_search,
        dynamic_components: !args.plain_search,
    })
}

fn run_solve(args: &SolveArgs) -> Result<u8> {
    let options = solve_options(args)?;
    let loaded = args.input.load()?;
    let result = solve(&loaded.graph, &options);
    if let Some(path) = &args.solution_out {
        io::write_solution(path, &result.cover, loaded.stats.indexing)?;
    }
    let report = RunReport::new(
        &loaded.name,
        &loaded.graph,
        &loaded.stats,
        &result,
        &options,
    );
    print!("{}", report::emit_report(&report, args.output));
    Ok(if result.optimal {
        EXIT_OPTIMAL
    } else {
        EXIT_BUDGET_EXPIRED
    })
}

fn run_reduce(args: &ReduceArgs) -> Result<u8> {
    let loaded = args.input.load()?;
    let started = Instant::now();
    let mut reduced = loaded.graph.clone();
    let outcome = reduce(
        &mut reduced,
        ReduceOptions {
            zero_weight_rule: args.zero_weight_rule,
        },
    );
    let elapsed = started.elapsed();
    if let Some(path) = &args.graph_out {
        let file = File::create(path).map_err(|e| Error::io(path, e))?;
        io::write_reduced_dimacs(&reduced, loaded.stats.indexing, &mut BufWriter::new(file))
            .map_err(|e| Error::io(path, e))?;
    }
    let report = ReduceReport::new(
        &loaded.name,
        &loaded.graph,
        &reduced,
        &loaded.stats,
        &outcome,
        args.zero_weight_rule,
        elapsed,
    );
    print!("{}", report::emit_reduce_report(&report, args.output));
    Ok(EXIT_OPTIMAL)
}

fn run_oracle(args: &OracleArgs) -> Result<u8> {
    let loaded = args.input.load()?;
    let result = brute_force_mwvc(&loaded.graph)?;
    let cover: Vec<usize> = result
        .one_cover
        .iter()
        .map(|&v| loaded.stats.indexing.external(v))
        .collect();
    match args.output {
        OutputFormat::Json => {
            let value = serde_json::json!({
                "instance": loaded.name,
                "weight": result.weight,
                "cover": cover,
            });
            println!("{}", serde_json::to_string_pretty(&value)?);
        }
        OutputFormat::Text => {
            println!("weight: {}", result.weight);
            let ids: Vec<String> = cover.iter().map(usize::to_string).collect();
            println!("cover:  {}", ids.join(" "));
        }
    }
    Ok(EXIT_OPTIMAL)
}

fn run_verify(args: &VerifyArgs) -> Result<u8> {
    let loaded = args.input.load()?;
    let g = &loaded.graph;
    let indexing = loaded.stats.indexing;
    let cover = io::read_solution(&args.cover, indexing, g.capacity())?;
    let mut inside = vec![false; g.capacity()];
    for &v in &cover {
        inside[v.index()] = true;
    }
    let uncovered = g
        .edges()
        .find(|(a, b)| !inside[a.index()] && !inside[b.index()]);
    match uncovered {
        None => {
            let mut distinct = cover.clone();
            distinct.sort_unstable();
            distinct.dedup();
            println!("valid cover, weight {}", g.total_weight(&distinct));
            Ok(EXIT_OPTIMAL)
        }
        Some((a, b)) => {
            println!(
                "not a cover: edge ({}, {}) is uncovered",
                indexing.external(a),
                indexing.external(b)
            );
            Ok(EXIT_INPUT_ERROR)
        }
    }
}

pub fn run(cli: &Cli) -> Result<u8> {
    match &cli.command {
        Command::Solve(a) => run_solve(a),
        Command::Reduce(a) => run_reduce(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Verify(a) => run_verify(a),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT_ERROR)
        }
    }
}
