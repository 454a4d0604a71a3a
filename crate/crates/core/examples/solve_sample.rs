//! Solves the six-vertex example graph and prints the report.

use mwvc::io::{GraphFormat, Indexing, LoadStats};
use mwvc::report::{emit_report, OutputFormat, RunReport};
use mwvc::{solve, SolveOptions, WeightedGraph};

fn main() {
    // v1-v2, v3-v5, v4-v5, v3-v6 with weights 1 2 2 2 5 1
    let (g, build) =
        WeightedGraph::build(6, &[(0, 1), (2, 4), (3, 4), (2, 5)], &[1, 2, 2, 2, 5, 1]).unwrap();
    let options = SolveOptions::default();
    let result = solve(&g, &options);

    let load = LoadStats {
        format: GraphFormat::EdgeList,
        indexing: Indexing::OneBased,
        weights: "inline".into(),
        build,
    };
    let report = RunReport::new("sample", &g, &load, &result, &options);
    print!("{}", emit_report(&report, OutputFormat::Text));
}
