//! Clique-partition lower bound.
//!
//! A clique on `k` vertices needs `k - 1` of them in any cover, so the
//! cheapest admissible charge for a clique is its weight minus its heaviest
//! member. Summing that over disjoint cliques bounds the remaining cover
//! weight from below.

use crate::graph::{VertexId, WeightedGraph};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliquePartition {
    pub cliques: Vec<Vec<VertexId>>,
}

impl CliquePartition {
    /// Panics unless the cliques are complete, disjoint and cover every live vertex.
    pub fn validate(&self, g: &WeightedGraph) {
        let mut seen = vec![false; g.capacity()];
        for clique in &self.cliques {
            for (i, &u) in clique.iter().enumerate() {
                assert!(g.is_alive(u), "clique member {u} is dead");
                assert!(!seen[u.index()], "{u} appears in two cliques");
                seen[u.index()] = true;
                for &x in &clique[i + 1..] {
                    assert!(
                        g.has_edge(u, x),
                        "clique members {u} and {x} are not adjacent"
                    );
                }
            }
        }
        for v in g.live_vertices() {
            assert!(seen[v.index()], "{v} is not in any clique");
        }
    }

    pub fn bound(&self, g: &WeightedGraph) -> u64 {
        self.cliques.iter().map(|c| clique_charge(g, c)).sum()
    }
}

fn clique_charge(g: &WeightedGraph, clique: &[VertexId]) -> u64 {
    let total: u64 = g.total_weight(clique);
    let heaviest = clique.iter().map(|&v| g.weight(v)).max().unwrap_or(0);
    total - heaviest
}

/// Greedy clique partitioner with reusable scratch space.
///
/// Seeds are taken in descending degree order (ties by ascending id). A clique
/// grows by the heaviest unassigned neighbour of the seed that is adjacent to
/// every current member (ties by ascending id).
#[derive(Debug, Default)]
pub struct CliquePartitioner {
    order: Vec<VertexId>,
    assigned: Vec<bool>,
    // number of current clique members adjacent to a candidate
    hits: Vec<u32>,
    candidate: Vec<bool>,
    candidates: Vec<VertexId>,
    residual: Vec<u64>,
    buckets: Vec<usize>,
}

impl CliquePartitioner {
    pub fn new() -> Self {
        Self::default()
    }

    fn prepare(&mut self, g: &WeightedGraph) {
        let n = g.capacity();
        self.assigned.clear();
        self.assigned.resize(n, false);
        self.hits.clear();
        self.hits.resize(n, 0);
        self.candidate.clear();
        self.candidate.resize(n, false);
        // counting sort: descending degree, ascending id within a degree
        self.buckets.clear();
        for v in g.live_vertices() {
            let d = g.degree(v);
            if d >= self.buckets.len() {
                self.buckets.resize(d + 1, 0);
            }
            self.buckets[d] += 1;
        }
        let mut start = 0;
        for count in self.buckets.iter_mut().rev() {
            let c = *count;
            *count = start;
            start += c;
        }
        self.order.clear();
        self.order.resize(start, VertexId::new(0));
        for v in g.live_vertices() {
            let slot = &mut self.buckets[g.degree(v)];
            self.order[*slot] = v;
            *slot += 1;
        }
    }

    /// Runs the greedy partition, handing each finished clique to `sink`.
    /// Stops early when `sink` returns `false`.
    fn run(&mut self, g: &WeightedGraph, mut sink: impl FnMut(&[VertexId]) -> bool) {
        self.prepare(g);
        let mut clique = Vec::new();
        for oi in 0..self.order.len() {
            let seed = self.order[oi];
            if self.assigned[seed.index()] {
                continue;
            }
            self.assigned[seed.index()] = true;
            clique.clear();
            clique.push(seed);

            self.candidates.clear();
            for &u in g.neighbors(seed) {
                if !self.assigned[u.index()] {
                    self.candidates.push(u);
                    self.candidate[u.index()] = true;
                    self.hits[u.index()] = 1;
                }
            }
            self.candidates
                .sort_by(|&a, &b| g.weight(b).cmp(&g.weight(a)).then(a.cmp(&b)));

            // a candidate skipped once can never become eligible again
            for ci in 0..self.candidates.len() {
                let c = self.candidates[ci];
                if self.hits[c.index()] as usize != clique.len() {
                    continue;
                }
                clique.push(c);
                self.assigned[c.index()] = true;
                for &y in g.neighbors(c) {
                    if self.candidate[y.index()] {
                        self.hits[y.index()] += 1;
                    }
                }
            }
            for &c in &self.candidates {
                self.candidate[c.index()] = false;
                self.hits[c.index()] = 0;
            }

            if !sink(&clique) {
                return;
            }
        }
    }

    pub fn partition(&mut self, g: &WeightedGraph) -> CliquePartition {
        let mut cliques = Vec::new();
        self.run(g, |c| {
            cliques.push(c.to_vec());
            true
        });
        CliquePartition { cliques }
    }

    /// The bound, but stops accumulating once it reaches `cutoff`. The
    /// returned value is `>= cutoff` iff the full bound is.
    pub fn bound_with_cutoff(&mut self, g: &WeightedGraph, cutoff: u64) -> u64 {
        let mut total = 0u64;
        self.run(g, |c| {
            total += clique_charge(g, c);
            total < cutoff
        });
        total
    }

    /// Clique partition bound plus a greedy edge packing over what the
    /// cliques leave unused. Never below the plain bound and still at most
    /// the minimum cover weight.
    ///
    /// A cover pays `w(C) - max(C)` inside clique `C`, and if it takes the
    /// heaviest member it pays at least `max(C) - second(C)` more. That
    /// surplus is the heaviest member's residual (a singleton keeps its whole
    /// weight). Every edge has a cover endpoint, so any packing of edge values
    /// within the residuals is paid for as well.
    pub fn packed_bound_with_cutoff(&mut self, g: &WeightedGraph, cutoff: u64) -> u64 {
        let mut residual = std::mem::take(&mut self.residual);
        residual.clear();
        residual.resize(g.capacity(), 0);
        let mut total = 0u64;
        self.run(g, |c| {
            total += clique_charge(g, c);
            let (mut top, mut second) = (c[0], 0u64);
            for &u in &c[1..] {
                let w = g.weight(u);
                if w > g.weight(top) {
                    second = g.weight(top);
                    top = u;
                } else {
                    second = second.max(w);
                }
            }
            residual[top.index()] = g.weight(top) - second;
            total < cutoff
        });
        if total < cutoff {
            for u in g.live_vertices() {
                for &x in g.neighbors(u) {
                    if x < u || residual[u.index()] == 0 {
                        continue;
                    }
                    let d = residual[u.index()].min(residual[x.index()]);
                    residual[u.index()] -= d;
                    residual[x.index()] -= d;
                    total += d;
                }
                if total >= cutoff {
                    break;
                }
            }
        }
        self.residual = residual;
        total
    }
}

/// [`CliquePartitioner::packed_bound_with_cutoff`] without a cutoff.
pub fn packed_lower_bound(g: &WeightedGraph) -> u64 {
    CliquePartitioner::new().packed_bound_with_cutoff(g, u64::MAX)
}

pub fn clique_partition(g: &WeightedGraph) -> CliquePartition {
    let partition = CliquePartitioner::new().partition(g);
    if cfg!(debug_assertions) {
        partition.validate(g);
    }
    partition
}

/// Sum over the greedy clique partition of clique weight minus heaviest member.
pub fn lower_bound(g: &WeightedGraph) -> u64 {
    clique_partition(g).bound(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    fn graph(n: usize, edges: &[(usize, usize)], weights: &[i64]) -> WeightedGraph {
        WeightedGraph::build(n, edges, weights).unwrap().0
    }

    #[test]
    fn triangle_is_one_clique() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2, 3]);
        let p = clique_partition(&g);
        assert_eq!(p.cliques.len(), 1);
        assert_eq!(p.cliques[0].len(), 3);
        assert_eq!(lower_bound(&g), 3);
    }

    #[test]
    fn edgeless_gives_singletons_and_zero() {
        let g = graph(4, &[], &[3, 1, 4, 1]);
        let p = clique_partition(&g);
        assert_eq!(p.cliques.len(), 4);
        assert_eq!(lower_bound(&g), 0);
        assert_eq!(lower_bound(&graph(0, &[], &[])), 0);
    }

    #[test]
    fn path_of_three() {
        let g = graph(3, &[(0, 1), (1, 2)], &[1, 1, 1]);
        let p = clique_partition(&g);
        assert_eq!(p.cliques, vec![vec![v(1), v(0)], vec![v(2)]]);
    }

    #[test]
    fn c5_bound_is_two() {
        let g = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)], &[1; 5]);
        assert_eq!(lower_bound(&g), 2);
    }

    #[test]
    fn heavier_neighbour_preferred() {
        // seed 0 (degree 2) joins its heavier neighbour 2
        let g = graph(4, &[(0, 1), (0, 2), (2, 3), (1, 3)], &[1, 1, 9, 1]);
        let p = clique_partition(&g);
        assert_eq!(p.cliques[0], vec![v(0), v(2)]);
    }

    #[test]
    fn cutoff_stops_early_but_preserves_comparison() {
        let g = graph(6, &[(0, 1), (2, 3), (4, 5)], &[5, 5, 5, 5, 5, 5]);
        let mut part = CliquePartitioner::new();
        assert_eq!(part.bound_with_cutoff(&g, u64::MAX), 15);
        let cut = part.bound_with_cutoff(&g, 6);
        assert!((6..=15).contains(&cut));
        assert_eq!(part.bound_with_cutoff(&g, 16), 15);
    }

    #[test]
    fn dead_vertices_are_ignored() {
        let mut g = graph(4, &[(0, 1), (1, 2), (0, 2), (2, 3)], &[1, 2, 3, 4]);
        g.remove_vertex(v(2));
        let p = clique_partition(&g);
        p.validate(&g);
        assert_eq!(p.bound(&g), 1);
    }

    #[test]
    fn packing_uses_what_cliques_leave() {
        // plain bound takes only the {0, 1} pair; packing adds edges 0-2 and 0-3
        let g = graph(4, &[(0, 1), (0, 2), (0, 3)], &[10, 3, 3, 3]);
        assert_eq!(lower_bound(&g), 3);
        assert_eq!(packed_lower_bound(&g), 9);
    }

    #[test]
    fn packing_adds_nothing_when_residuals_vanish() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)], &[1, 2, 3]);
        assert_eq!(packed_lower_bound(&g), 3);
        let p3 = graph(3, &[(0, 1), (1, 2)], &[1, 1, 1]);
        assert_eq!(packed_lower_bound(&p3), 1);
        assert_eq!(packed_lower_bound(&graph(0, &[], &[])), 0);
    }

    #[test]
    fn packed_bound_between_plain_bound_and_optimum() {
        use crate::oracle::{brute_force_mwvc, random_graph, EdgeModel, WeightModel};
        for seed in 0..300 {
            let n = 1 + (seed as usize % 12);
            let g = random_graph(
                n,
                EdgeModel::Probability(0.35),
                WeightModel::Uniform { min: 0, max: 20 },
                seed,
            );
            let packed = packed_lower_bound(&g);
            assert!(lower_bound(&g) <= packed, "seed {seed}");
            assert!(
                packed <= brute_force_mwvc(&g).unwrap().weight,
                "seed {seed}"
            );
        }
    }
}
