//! Machine-readable and human-readable run reports.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::branch::Heuristic;
use crate::graph::{VertexId, WeightedGraph};
use crate::io::{Indexing, LoadStats};
use crate::reduce::{ReductionOutcome, RuleCounts};
use crate::search::{SolveOptions, SolveResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown output format `{other}`")),
        }
    }
}

/// `2|E| / (|V| (|V| - 1))`, or 0 below two vertices.
pub fn density(vertices: usize, edges: usize) -> f64 {
    if vertices < 2 {
        return 0.0;
    }
    2.0 * edges as f64 / (vertices as f64 * (vertices as f64 - 1.0))
}

fn seconds_ms(d: Duration) -> f64 {
    d.as_millis() as f64 / 1000.0
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub enabled: bool,
    pub remaining_vertices: usize,
    pub remaining_edges: usize,
    /// Connected subgraphs left for search.
    pub components: usize,
    pub removed_by_rule: RuleCounts,
    pub passes: usize,
    pub partial_cover_weight: u64,
}

impl ReductionReport {
    pub fn new(
        outcome: Option<&ReductionOutcome>,
        remaining_vertices: usize,
        remaining_edges: usize,
        components: usize,
    ) -> Self {
        ReductionReport {
            enabled: outcome.is_some(),
            remaining_vertices,
            remaining_edges,
            components,
            removed_by_rule: outcome.map(|o| o.removed_by_rule).unwrap_or_default(),
            passes: outcome.map_or(0, |o| o.passes),
            partial_cover_weight: outcome.map_or(0, |o| o.partial_cover.total_weight()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub nodes_explored: u64,
    pub prunes: u64,
    pub max_depth: usize,
    pub component_sizes: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub heuristic: Heuristic,
    pub seed: u64,
    pub time_limit: Option<f64>,
    pub node_limit: Option<u64>,
    pub reductions: bool,
    pub zero_weight_rule: bool,
    pub parallel_components: bool,
}

impl From<&SolveOptions> for ConfigEcho {
    fn from(o: &SolveOptions) -> Self {
        ConfigEcho {
            heuristic: o.heuristic.kind,
            seed: o.heuristic.seed,
            time_limit: o.budget.time_limit.map(|t| t.as_secs_f64()),
            node_limit: o.budget.node_limit,
            reductions: o.reductions,
            zero_weight_rule: o.zero_weight_rule,
            parallel_components: o.parallel_components,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub density: f64,
}

impl GraphSummary {
    pub fn of(g: &WeightedGraph) -> Self {
        GraphSummary {
            vertices: g.num_alive(),
            edges: g.num_edges(),
            density: density(g.num_alive(), g.num_edges()),
        }
    }
}

/// Result of a full solve. `cover` uses the input file's indexing.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub instance: String,
    #[serde(flatten)]
    pub graph: GraphSummary,
    pub load: LoadStats,
    pub reduction: ReductionReport,
    pub weight: u64,
    pub optimal: bool,
    pub cover: Vec<usize>,
    pub search: SearchReport,
    pub config: ConfigEcho,
    pub runtime_seconds: f64,
}

impl RunReport {
    pub fn new(
        instance: &str,
        g: &WeightedGraph,
        load: &LoadStats,
        result: &SolveResult,
        options: &SolveOptions,
    ) -> Self {
        let stats = &result.stats;
        RunReport {
            instance: instance.to_string(),
            graph: GraphSummary::of(g),
            load: load.clone(),
            reduction: ReductionReport::new(
                stats.reduction.as_ref(),
                stats.remaining_vertices,
                stats.remaining_edges,
                stats.component_sizes.len(),
            ),
            weight: result.weight,
            optimal: result.optimal,
            cover: external(&result.cover, load.indexing),
            search: SearchReport {
                nodes_explored: stats.search.nodes_explored,
                prunes: stats.search.prunes,
                max_depth: stats.search.max_depth,
                component_sizes: stats.component_sizes.clone(),
            },
            config: options.into(),
            runtime_seconds: seconds_ms(stats.wall_time),
        }
    }
}

/// Result of running only the reduction rules.
#[derive(Debug, Clone, Serialize)]
pub struct ReduceReport {
    pub instance: String,
    #[serde(flatten)]
    pub graph: GraphSummary,
    pub load: LoadStats,
    pub reduction: ReductionReport,
    pub partial_cover: Vec<usize>,
    pub zero_weight_rule: bool,
    pub runtime_seconds: f64,
}

impl ReduceReport {
    pub fn new(
        instance: &str,
        original: &WeightedGraph,
        reduced: &WeightedGraph,
        load: &LoadStats,
        outcome: &ReductionOutcome,
        zero_weight_rule: bool,
        elapsed: Duration,
    ) -> Self {
        let mut cover = outcome.partial_cover.members().to_vec();
        cover.sort_unstable();
        ReduceReport {
            instance: instance.to_string(),
            graph: GraphSummary::of(original),
            load: load.clone(),
            reduction: ReductionReport::new(
                Some(outcome),
                reduced.num_alive(),
                reduced.num_edges(),
                reduced.components().len(),
            ),
            partial_cover: external(&cover, load.indexing),
            zero_weight_rule,
            runtime_seconds: seconds_ms(elapsed),
        }
    }
}

fn external(cover: &[VertexId], indexing: Indexing) -> Vec<usize> {
    cover.iter().map(|&v| indexing.external(v)).collect()
}

fn rule_line(out: &mut String, r: &ReductionReport) {
    let c = &r.removed_by_rule;
    let _ = writeln!(
        out,
        "removed:    degree0={} adjacent={} degree1={} degree2={} zero-weight={} ({} passes)",
        c.degree0, c.adjacent, c.degree1, c.degree2, c.zero_weight, r.passes
    );
}

fn list(ids: &[usize]) -> String {
    ids.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn emit_report(report: &RunReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serializes") + "\n"
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let r = &report.reduction;
            let _ = writeln!(out, "instance:   {}", report.instance);
            let _ = writeln!(
                out,
                "graph:      |V|={} |E|={} density={:.6}",
                report.graph.vertices, report.graph.edges, report.graph.density
            );
            if r.enabled {
                let _ = writeln!(
                    out,
                    "reduction:  {} vertices left in {} subgraphs, partial cover weight {}",
                    r.remaining_vertices, r.components, r.partial_cover_weight
                );
                rule_line(&mut out, r);
            } else {
                let _ = writeln!(out, "reduction:  disabled");
            }
            let _ = writeln!(
                out,
                "search:     {} nodes, {} prunes, depth {}",
                report.search.nodes_explored, report.search.prunes, report.search.max_depth
            );
            let status = if report.optimal {
                "optimal"
            } else {
                "best found (budget expired)"
            };
            let _ = writeln!(out, "weight:     {} ({status})", report.weight);
            let _ = writeln!(out, "cover:      {}", list(&report.cover));
            let _ = writeln!(out, "runtime:    {:.3} s", report.runtime_seconds);
            out
        }
    }
}

pub fn emit_reduce_report(report: &ReduceReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            serde_json::to_string_pretty(report).expect("report serializes") + "\n"
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let r = &report.reduction;
            let _ = writeln!(out, "instance:   {}", report.instance);
            let _ = writeln!(
                out,
                "graph:      |V|={} |E|={} density={:.6}",
                report.graph.vertices, report.graph.edges, report.graph.density
            );
            let _ = writeln!(
                out,
                "remaining:  {} vertices, {} edges, {} subgraphs",
                r.remaining_vertices, r.remaining_edges, r.components
            );
            rule_line(&mut out, r);
            let _ = writeln!(
                out,
                "partial:    weight {}: {}",
                r.partial_cover_weight,
                list(&report.partial_cover)
            );
            let _ = writeln!(out, "runtime:    {:.3} s", report.runtime_seconds);
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn density_formula() {
        assert_eq!(density(0, 0), 0.0);
        assert_eq!(density(1, 0), 0.0);
        assert_eq!(density(10, 0), 0.0);
        assert_eq!(density(4, 6), 1.0);
        assert!((density(6, 4) - 4.0 / 15.0).abs() < 1e-12);
    }

    #[test]
    fn runtime_has_millisecond_resolution() {
        assert_eq!(seconds_ms(Duration::from_micros(1_234_567)), 1.234);
    }
}
