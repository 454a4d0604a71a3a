//! Exact minimum weight vertex cover for large sparse graphs.
//!
//! The solver first shrinks the graph with four weighted reduction rules
//! ([`reduce`]), splits the remainder into connected components, and solves
//! each component with a depth-first branch and bound ([`search`]) pruned by a
//! clique-partition lower bound with an edge packing on top ([`bound`]). An exhaustive [`oracle`] and a
//! seeded instance generator are included for cross-checking.
//!
//! ```
//! use mwvc::{solve, SolveOptions, VertexId, WeightedGraph};
//!
//! let (g, _) = WeightedGraph::build(3, &[(0, 1), (1, 2)], &[2, 3, 2]).unwrap();
//! let result = solve(&g, &SolveOptions::default());
//! assert!(result.optimal);
//! assert_eq!(result.weight, 3);
//! assert_eq!(result.cover, vec![VertexId::new(1)]);
//! ```

pub mod bound;
pub mod branch;
pub mod cli;
pub mod error;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod reduce;
pub mod report;
pub mod search;

pub use bound::{
    clique_partition, lower_bound, packed_lower_bound, CliquePartition, CliquePartitioner,
};
pub use branch::{neighborhood_internal_edges, select_vertex, Heuristic, HeuristicChoice};
pub use error::{Error, Result};
pub use graph::{Checkpoint, ComponentPartition, VertexId, WeightScheme, WeightedGraph};
pub use oracle::{brute_force_mwvc, random_graph, EdgeModel, OracleResult, WeightModel};
pub use reduce::{reduce, PartialCover, ReduceOptions, ReductionOutcome};
pub use search::{search, solve, Incumbent, ResourceBudget, SolveOptions, SolveResult};
