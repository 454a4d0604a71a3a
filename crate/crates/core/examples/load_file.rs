//! Loads a graph file and solves it, printing the JSON report.
//!
//! ```text
//! cargo run --release --example load_file -- path/to/graph.mtx [weights]
//! ```
//!
//! `weights` is anything `--weights` accepts on the command line.

use mwvc::io::{parse_graph, GraphFileSpec, WeightSource};
use mwvc::report::{emit_report, OutputFormat, RunReport};
use mwvc::{solve, SolveOptions};

fn main() -> mwvc::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| {
        eprintln!("usage: load_file <graph> [weights]");
        std::process::exit(1);
    });
    let weights: WeightSource = args.next().as_deref().unwrap_or("auto").parse().unwrap();

    let loaded = parse_graph(&GraphFileSpec::new(&path).weights(weights))?;
    let options = SolveOptions::default();
    let result = solve(&loaded.graph, &options);
    let report = RunReport::new(
        &loaded.name,
        &loaded.graph,
        &loaded.stats,
        &result,
        &options,
    );
    print!("{}", emit_report(&report, OutputFormat::Json));
    Ok(())
}
