//! Exhaustive reference solver and seeded random instances.
//!
//! Nothing here shares code with the reduction or search paths; it exists to
//! check them.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{VertexId, WeightScheme, WeightedGraph};

/// Largest live vertex count [`brute_force_mwvc`] accepts.
pub const ORACLE_LIMIT: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub weight: u64,
    /// Lexicographically smallest minimum-weight cover, ascending ids.
    pub one_cover: Vec<VertexId>,
}

/// Minimum weight vertex cover of the live part of `g` by trying all subsets.
pub fn brute_force_mwvc(g: &WeightedGraph) -> Result<OracleResult> {
    let live: Vec<VertexId> = g.live_vertices().collect();
    let n = live.len();
    if n > ORACLE_LIMIT {
        return Err(Error::OracleTooLarge {
            vertices: n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut local = vec![usize::MAX; g.capacity()];
    for (i, v) in live.iter().enumerate() {
        local[v.index()] = i;
    }
    let weights: Vec<u64> = live.iter().map(|&v| g.weight(v)).collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .map(|(a, b)| (local[a.index()], local[b.index()]))
        .collect();

    let mut best: Option<(u64, Vec<usize>)> = None;
    for mask in 0u32..(1u32 << n) {
        let covers = edges
            .iter()
            .all(|&(a, b)| mask & (1 << a) != 0 || mask & (1 << b) != 0);
        if !covers {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let weight: u64 = members.iter().map(|&i| weights[i]).sum();
        let better = match &best {
            None => true,
            Some((bw, bm)) => weight < *bw || (weight == *bw && members < *bm),
        };
        if better {
            best = Some((weight, members));
        }
    }

    let (weight, members) = best.expect("the full vertex set is always a cover");
    let one_cover: Vec<VertexId> = members.into_iter().map(|i| live[i]).collect();
    assert!(g.is_vertex_cover(&one_cover));
    assert_eq!(g.total_weight(&one_cover), weight);
    Ok(OracleResult { weight, one_cover })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeModel {
    /// Each pair independently with this probability.
    Probability(f64),
    /// Exactly this many distinct pairs (capped at the complete graph).
    Count(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightModel {
    Scheme(WeightScheme),
    /// Independent uniform draws from `[min, max]`.
    Uniform {
        min: u32,
        max: u32,
    },
}

/// Seeded random graph; identical arguments give identical graphs on every
/// platform (ChaCha8 stream).
pub fn random_graph(n: usize, edges: EdgeModel, weights: WeightModel, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    match edges {
        EdgeModel::Probability(p) => {
            assert!(
                (0.0..=1.0).contains(&p),
                "edge probability {p} outside [0, 1]"
            );
            for a in 0..n {
                for b in a + 1..n {
                    if rng.gen_bool(p) {
                        pairs.push((a, b));
                    }
                }
            }
        }
        EdgeModel::Count(m) => {
            let max = n.saturating_sub(1) * n / 2;
            let m = m.min(max);
            let mut seen = HashSet::with_capacity(m);
            while pairs.len() < m {
                let a = rng.gen_range(0..n);
                let b = rng.gen_range(0..n);
                if a == b {
                    continue;
                }
                let key = (a.min(b), a.max(b));
                if seen.insert(key) {
                    pairs.push(key);
                }
            }
        }
    }
    let w: Vec<i64> = (0..n)
        .map(|i| match weights {
            WeightModel::Scheme(s) => i64::from(s.weight(i)),
            WeightModel::Uniform { min, max } => i64::from(rng.gen_range(min..=max)),
        })
        .collect();
    WeightedGraph::build(n, &pairs, &w)
        .expect("generated instance is well formed")
        .0
}
