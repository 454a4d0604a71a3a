//! Branching-vertex selection.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::graph::{VertexId, WeightedGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Heuristic {
    /// Greatest degree.
    #[default]
    H1,
    /// Uniformly random among vertices that still have an edge.
    H2,
    /// Smallest weight.
    H3,
    /// Greatest degree-to-weight ratio; zero weight counts as infinite.
    H4,
}

impl fmt::Display for Heuristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Heuristic::H1 => "h1",
            Heuristic::H2 => "h2",
            Heuristic::H3 => "h3",
            Heuristic::H4 => "h4",
        };
        f.write_str(s)
    }
}

impl FromStr for Heuristic {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "h1" => Ok(Heuristic::H1),
            "h2" => Ok(Heuristic::H2),
            "h3" => Ok(Heuristic::H3),
            "h4" => Ok(Heuristic::H4),
            other => Err(format!(
                "unknown heuristic `{other}` (expected h1, h2, h3 or h4)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct HeuristicChoice {
    pub kind: Heuristic,
    /// Only read by [`Heuristic::H2`].
    pub seed: u64,
}

impl HeuristicChoice {
    pub fn new(kind: Heuristic, seed: u64) -> Self {
        HeuristicChoice { kind, seed }
    }
}

/// Per-search selector state. `stream` separates the random sequences of
/// independent searches that share a seed.
#[derive(Debug, Clone)]
pub struct BranchSelector {
    kind: Heuristic,
    rng: ChaCha8Rng,
    pool: Vec<VertexId>,
}

impl BranchSelector {
    pub fn new(choice: HeuristicChoice, stream: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(choice.seed);
        rng.set_stream(stream);
        BranchSelector {
            kind: choice.kind,
            rng,
            pool: Vec::new(),
        }
    }

    /// Picks the branching vertex. Panics if `g` has no edge.
    pub fn select(&mut self, g: &WeightedGraph) -> VertexId {
        assert!(g.num_edges() > 0, "select_vertex: graph has no edge");
        self.pool.clear();
        self.pool
            .extend(g.live_vertices().filter(|&v| g.degree(v) > 0));

        if self.kind == Heuristic::H2 {
            let i = self.rng.gen_range(0..self.pool.len());
            return self.pool[i];
        }

        let kind = self.kind;
        let preference = |a: VertexId, b: VertexId| compare(kind, g, a, b);
        let mut best = self.pool[0];
        let mut ties = vec![best];
        for &v in &self.pool[1..] {
            match preference(v, best) {
                Ordering::Greater => {
                    best = v;
                    ties.clear();
                    ties.push(v);
                }
                Ordering::Equal => ties.push(v),
                Ordering::Less => {}
            }
        }
        if ties.len() == 1 {
            return best;
        }
        // pool is in ascending id order, so min_by_key keeps the smallest id on ties
        ties.into_iter()
            .min_by_key(|&v| neighborhood_internal_edges(g, v))
            .expect("non-empty tie set")
    }
}

/// `Greater` when `a` is the better branching candidate under `kind`.
fn compare(kind: Heuristic, g: &WeightedGraph, a: VertexId, b: VertexId) -> Ordering {
    match kind {
        Heuristic::H1 => g.degree(a).cmp(&g.degree(b)),
        Heuristic::H3 => g.weight(b).cmp(&g.weight(a)),
        Heuristic::H4 => {
            let (da, wa) = (g.degree(a) as u64, g.weight(a));
            let (db, wb) = (g.degree(b) as u64, g.weight(b));
            match (wa == 0, wb == 0) {
                (true, true) => da.cmp(&db),
                (true, false) => Ordering::Greater,
                (false, true) => Ordering::Less,
                // da/wa vs db/wb; d < 2^32 and w < 2^32 so the products fit
                (false, false) => (da * wb).cmp(&(db * wa)),
            }
        }
        Heuristic::H2 => Ordering::Equal,
    }
}

/// One-shot selection with a fresh selector.
pub fn select_vertex(g: &WeightedGraph, choice: HeuristicChoice) -> VertexId {
    BranchSelector::new(choice, 0).select(g)
}

/// Number of edges with both endpoints in `N(v)`.
pub fn neighborhood_internal_edges(g: &WeightedGraph, v: VertexId) -> usize {
    let mut around: Vec<VertexId> = g.neighbors(v).to_vec();
    around.sort_unstable();
    let twice: usize = around
        .iter()
        .map(|&u| {
            g.neighbors(u)
                .iter()
                .filter(|x| around.binary_search(x).is_ok())
                .count()
        })
        .sum();
    twice / 2
}
