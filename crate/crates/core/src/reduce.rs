//! Weighted vertex-cover reduction rules and their fixpoint driver.
//!
//! Every rule scans live vertices in ascending id order, applies itself
//! wherever its condition holds, and repeats the sweep until a full sweep
//! fires nothing. Vertices forced into the cover are recorded in a
//! [`PartialCover`] and removed from the graph.

use serde::Serialize;

use crate::graph::{VertexId, WeightedGraph};

/// Vertices committed to the cover, with their running weight.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialCover {
    members: Vec<VertexId>,
    total_weight: u64,
}

impl PartialCover {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, v: VertexId, weight: u64) {
        self.members.push(v);
        self.total_weight += weight;
    }

    /// Drops members added after the first `len`, given the graph that
    /// supplies their weights.
    pub fn truncate(&mut self, len: usize, g: &WeightedGraph) {
        for v in self.members.drain(len..) {
            self.total_weight -= g.weight(v);
        }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct RuleCounts {
    pub degree0: usize,
    pub adjacent: usize,
    pub degree1: usize,
    pub degree2: usize,
    /// Only nonzero when the optional zero-weight rule is enabled.
    pub zero_weight: usize,
}

impl RuleCounts {
    pub fn total(&self) -> usize {
        self.degree0 + self.adjacent + self.degree1 + self.degree2 + self.zero_weight
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReduceOptions {
    /// Take every zero-weight vertex that still has an edge.
    pub zero_weight_rule: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub partial_cover: PartialCover,
    pub removed_by_rule: RuleCounts,
    /// Outer iterations, including the final one that removed nothing.
    pub passes: usize,
}

/// Removes every isolated vertex. Nothing enters the cover.
pub fn rule_degree0(g: &mut WeightedGraph) -> usize {
    let mut removed = 0;
    loop {
        let mut fired = false;
        for v in ids(g) {
            if g.is_alive(v) && g.degree(v) == 0 {
                g.remove_vertex(v);
                removed += 1;
                fired = true;
            }
        }
        if !fired {
            return removed;
        }
    }
}

/// If `w(v) >= w(N(v))`, take `N(v)` and drop `N*(v)`. Isolated vertices are
/// left to [`rule_degree0`].
pub fn rule_adjacent(g: &mut WeightedGraph, cover: &mut PartialCover) -> usize {
    let mut removed = 0;
    loop {
        let mut fired = false;
        for v in ids(g) {
            if !g.is_alive(v) || g.degree(v) == 0 {
                continue;
            }
            if g.weight(v) >= g.neighborhood_weight(v) {
                let taken = g.remove_closed_neighborhood(v);
                for &u in &taken {
                    cover.push(u, g.weight(u));
                }
                removed += taken.len() + 1;
                fired = true;
            }
        }
        if !fired {
            return removed;
        }
    }
}

/// Weight of the degree-1 neighbours of `v`, if there are any.
fn pendant_weight(g: &WeightedGraph, v: VertexId) -> Option<u64> {
    let mut any = false;
    let mut total = 0;
    for &u in g.neighbors(v) {
        if g.degree(u) == 1 {
            any = true;
            total += g.weight(u);
        }
    }
    any.then_some(total)
}

/// If `v` has degree-1 neighbours `N_1(v)` and `w(v) <= w(N_1(v))`, take `v`
/// and drop it together with `N_1(v)`.
pub fn rule_degree1(g: &mut WeightedGraph, cover: &mut PartialCover) -> usize {
    let mut removed = 0;
    loop {
        let mut fired = false;
        for v in ids(g) {
            if !g.is_alive(v) || g.degree(v) == 0 {
                continue;
            }
            match pendant_weight(g, v) {
                Some(pendants) if g.weight(v) <= pendants => {}
                _ => continue,
            }
            let leaves: Vec<VertexId> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&u| g.degree(u) == 1)
                .collect();
            cover.push(v, g.weight(v));
            g.remove_vertex(v);
            for &u in &leaves {
                g.remove_vertex(u);
            }
            removed += leaves.len() + 1;
            fired = true;
        }
        if !fired {
            return removed;
        }
    }
}

fn pair_of(g: &WeightedGraph, v: VertexId) -> (VertexId, VertexId) {
    let row = g.neighbors(v);
    debug_assert_eq!(row.len(), 2);
    (row[0].min(row[1]), row[0].max(row[1]))
}

/// All live degree-2 vertices whose two neighbours are exactly `a` and `b`.
fn degree2_group(g: &WeightedGraph, a: VertexId, b: VertexId) -> Vec<VertexId> {
    let mut group: Vec<VertexId> = g
        .neighbors(a)
        .iter()
        .copied()
        .filter(|&x| g.degree(x) == 2 && g.neighbors(x).contains(&b))
        .collect();
    group.sort_unstable();
    group
}

/// For each pair `{a, b}` with a maximal set `A` of degree-2 vertices adjacent
/// to both: if `w(a) + w(b) <= w(A)`, take `a` and `b` and drop `A ∪ {a, b}`.
/// Pairs are visited in ascending `(min, max)` order.
pub fn rule_degree2(g: &mut WeightedGraph, cover: &mut PartialCover) -> usize {
    let mut removed = 0;
    loop {
        let mut fired = false;
        let mut pairs: Vec<(VertexId, VertexId)> = g
            .live_vertices()
            .filter(|&v| g.degree(v) == 2)
            .map(|v| pair_of(g, v))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        for (a, b) in pairs {
            if !g.is_alive(a) || !g.is_alive(b) {
                continue;
            }
            let group = degree2_group(g, a, b);
            if group.is_empty() || g.weight(a) + g.weight(b) > g.total_weight(&group) {
                continue;
            }
            for &x in &group {
                g.remove_vertex(x);
            }
            cover.push(a, g.weight(a));
            cover.push(b, g.weight(b));
            g.remove_vertex(a);
            g.remove_vertex(b);
            removed += group.len() + 2;
            fired = true;
        }
        if !fired {
            return removed;
        }
    }
}

/// Takes every zero-weight vertex that has at least one edge. Any cover
/// missing such a vertex can add it for free.
pub fn rule_zero_weight(g: &mut WeightedGraph, cover: &mut PartialCover) -> usize {
    let mut removed = 0;
    for v in ids(g) {
        if g.is_alive(v) && g.degree(v) > 0 && g.weight(v) == 0 {
            cover.push(v, 0);
            g.remove_vertex(v);
            removed += 1;
        }
    }
    removed
}

/// Applies the rules in the order Degree-0, (zero-weight), Adjacent,
/// Degree-1, Degree-2, each until quiescent, and repeats the whole pass until
/// a pass removes no vertex.
pub fn reduce(g: &mut WeightedGraph, options: ReduceOptions) -> ReductionOutcome {
    let mut cover = PartialCover::new();
    let mut counts = RuleCounts::default();
    let mut passes = 0;
    loop {
        passes += 1;
        let before = g.num_alive();
        counts.degree0 += rule_degree0(g);
        if options.zero_weight_rule {
            counts.zero_weight += rule_zero_weight(g, &mut cover);
        }
        counts.adjacent += rule_adjacent(g, &mut cover);
        counts.degree1 += rule_degree1(g, &mut cover);
        counts.degree2 += rule_degree2(g, &mut cover);
        if g.num_alive() == before {
            break;
        }
    }
    ReductionOutcome {
        partial_cover: cover,
        removed_by_rule: counts,
        passes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    Degree0,
    Adjacent,
    Degree1,
    Degree2,
}

/// First rule (and witness vertex) still applicable to `g`, if any. For
/// Degree-2 the witness is one vertex of the qualifying group.
///
/// Evaluated from the rule predicates directly, independent of the sweeps
/// above.
pub fn applicable_rule(g: &WeightedGraph) -> Option<(Rule, VertexId)> {
    for v in g.live_vertices() {
        let d = g.degree(v);
        if d == 0 {
            return Some((Rule::Degree0, v));
        }
        if g.weight(v) >= g.neighborhood_weight(v) {
            return Some((Rule::Adjacent, v));
        }
        let leaves: Vec<_> = g
            .neighbors(v)
            .iter()
            .filter(|&&u| g.degree(u) == 1)
            .collect();
        if !leaves.is_empty() && g.weight(v) <= leaves.iter().map(|&&u| g.weight(u)).sum() {
            return Some((Rule::Degree1, v));
        }
    }
    for v in g.live_vertices().filter(|&v| g.degree(v) == 2) {
        let (a, b) = pair_of(g, v);
        let group_weight: u64 = g
            .live_vertices()
            .filter(|&x| g.degree(x) == 2 && pair_of(g, x) == (a, b))
            .map(|x| g.weight(x))
            .sum();
        if g.weight(a) + g.weight(b) <= group_weight {
            return Some((Rule::Degree2, v));
        }
    }
    None
}

fn ids(g: &WeightedGraph) -> impl Iterator<Item = VertexId> {
    (0..g.capacity()).map(VertexId::new)
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

    const SAMPLE_EDGES: [(usize, usize); 4] = [(0, 1), (2, 4), (3, 4), (2, 5)];

    fn sorted(mut s: Vec<VertexId>) -> Vec<VertexId> {
        s.sort_unstable();
        s
    }

    #[test]
    fn degree0_examples() {
        let mut g = graph(5, &[], &[1; 5]);
        assert_eq!(rule_degree0(&mut g), 5);
        assert!(g.is_empty());

        let mut g = graph(2, &[(0, 1)], &[1, 1]);
        assert_eq!(rule_degree0(&mut g), 0);
    }

    #[test]
    fn degree0_after_degree2_on_sample() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 1]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree2(&mut g, &mut cover), 3);
        assert_eq!(rule_degree0(&mut g), 1);
        assert!(!g.is_alive(v(5)));
    }

    #[test]
    fn adjacent_on_sample_at_v5() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 1]);
        // isolate the v5 application from the earlier one at v2
        g.remove_vertex(v(0));
        g.remove_vertex(v(1));
        let mut cover = PartialCover::new();
        let removed = rule_adjacent(&mut g, &mut cover);
        assert_eq!(removed, 3);
        assert_eq!(sorted(cover.members().to_vec()), vec![v(2), v(3)]);
        assert_eq!(cover.total_weight(), 4);
        assert!(g.is_alive(v(5)));
    }

    #[test]
    fn adjacent_on_k2_and_star() {
        let mut g = graph(2, &[(0, 1)], &[2, 1]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_adjacent(&mut g, &mut cover), 2);
        assert_eq!(cover.members(), &[v(1)]);

        let mut g = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)], &[10, 2, 2, 2, 2]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_adjacent(&mut g, &mut cover), 5);
        assert_eq!(
            sorted(cover.members().to_vec()),
            vec![v(1), v(2), v(3), v(4)]
        );
        assert_eq!(cover.total_weight(), 8);
    }

    #[test]
    fn degree1_on_sample_b() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 3]);
        g.remove_vertex(v(0));
        g.remove_vertex(v(1));
        let mut cover = PartialCover::new();
        let removed = rule_degree1(&mut g, &mut cover);
        assert!(!g.is_alive(v(2)) && !g.is_alive(v(5)));
        assert_eq!(cover.members()[0], v(2));
        assert!(removed >= 2);
    }

    #[test]
    fn degree1_on_k2() {
        let mut g = graph(2, &[(0, 1)], &[1, 2]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree1(&mut g, &mut cover), 2);
        assert_eq!(cover.members(), &[v(0)]);
    }

    #[test]
    fn degree1_fires_where_adjacent_cannot() {
        let mut g = graph(3, &[(0, 1), (0, 2)], &[3, 2, 2]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_adjacent(&mut g, &mut cover), 0);
        assert_eq!(rule_degree1(&mut g, &mut cover), 3);
        assert_eq!(cover.members(), &[v(0)]);
        assert_eq!(cover.total_weight(), 3);
    }

    #[test]
    fn degree1_needs_pendant_neighbours() {
        // zero-weight vertex with no pendant neighbour must stay
        let mut g = graph(3, &[(0, 1), (1, 2), (0, 2)], &[0, 1, 1]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree1(&mut g, &mut cover), 0);
        assert!(cover.is_empty());
    }

    #[test]
    fn degree2_examples() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 1]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree2(&mut g, &mut cover), 3);
        assert_eq!(cover.members(), &[v(2), v(3)]);

        // C4 a-b-c-d-a
        let mut g = graph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)], &[1, 3, 1, 3]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree2(&mut g, &mut cover), 4);
        assert_eq!(cover.members(), &[v(0), v(2)]);
        assert_eq!(cover.total_weight(), 2);

        let mut g = graph(3, &[(0, 1), (1, 2)], &[1, 1, 1]);
        let mut cover = PartialCover::new();
        assert_eq!(rule_degree2(&mut g, &mut cover), 0);
    }

    #[test]
    fn reduce_sample() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 1]);
        let out = reduce(&mut g, ReduceOptions::default());
        assert!(g.is_empty());
        assert_eq!(
            sorted(out.partial_cover.members().to_vec()),
            vec![v(0), v(2), v(3)]
        );
        assert_eq!(out.partial_cover.total_weight(), 5);
        assert_eq!(out.removed_by_rule.adjacent, 5);
        assert_eq!(out.removed_by_rule.degree0, 1);
        assert_eq!(out.removed_by_rule.total(), 6);
    }

    #[test]
    fn reduce_trivial_cases() {
        let mut g = graph(4, &[], &[1; 4]);
        let out = reduce(&mut g, ReduceOptions::default());
        assert!(g.is_empty());
        assert!(out.partial_cover.is_empty());

        let c5 = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
        let mut g = graph(5, &c5, &[1; 5]);
        let out = reduce(&mut g, ReduceOptions::default());
        assert_eq!(g.num_alive(), 5);
        assert_eq!(out.removed_by_rule.total(), 0);
        assert_eq!(out.passes, 1);
        assert_eq!(applicable_rule(&g), None);
    }

    #[test]
    fn zero_weight_rule_is_optional() {
        let c4 = [(0, 1), (1, 2), (2, 3), (3, 0)];
        let weights = [0, 5, 5, 5];
        let mut g = graph(4, &c4, &weights);
        let out = reduce(&mut g, ReduceOptions::default());
        assert_eq!(out.removed_by_rule.zero_weight, 0);

        let mut g = graph(4, &c4, &weights);
        let out = reduce(
            &mut g,
            ReduceOptions {
                zero_weight_rule: true,
            },
        );
        assert_eq!(out.removed_by_rule.zero_weight, 1);
        assert!(out.partial_cover.members().contains(&v(0)));
    }

    #[test]
    fn reduce_is_idempotent_on_sample_b() {
        let mut g = graph(6, &SAMPLE_EDGES, &[1, 2, 2, 2, 5, 3]);
        reduce(&mut g, ReduceOptions::default());
        let snapshot = g.clone();
        let again = reduce(&mut g, ReduceOptions::default());
        assert!(again.partial_cover.is_empty());
        assert!(g.same_structure(&snapshot));
    }

    #[test]
    fn truncate_restores_weight() {
        let g = graph(3, &[], &[4, 5, 6]);
        let mut cover = PartialCover::new();
        cover.push(v(0), 4);
        cover.push(v(2), 6);
        cover.truncate(1, &g);
        assert_eq!(cover.total_weight(), 4);
        assert_eq!(cover.members(), &[v(0)]);
    }
}
