//! Applies each reduction rule on its own, then the full fixpoint.

use mwvc::reduce::{rule_adjacent, rule_degree0, rule_degree1, rule_degree2, PartialCover};
use mwvc::{reduce, ReduceOptions, WeightedGraph};

fn show(name: &str, g: &WeightedGraph, cover: &PartialCover) {
    let ids: Vec<String> = cover.members().iter().map(|v| v.to_string()).collect();
    println!(
        "{name:<10} live={} edges={} cover=[{}] weight={}",
        g.num_alive(),
        g.num_edges(),
        ids.join(", "),
        cover.total_weight()
    );
}

fn build(n: usize, edges: &[(usize, usize)], weights: &[i64]) -> WeightedGraph {
    WeightedGraph::build(n, edges, weights).unwrap().0
}

fn main() {
    let mut cover = PartialCover::new();

    let mut g = build(3, &[(0, 1)], &[4, 1, 7]);
    rule_degree0(&mut g);
    show("degree-0", &g, &cover);

    // the hub weighs more than its three leaves together
    let mut g = build(4, &[(0, 1), (0, 2), (0, 3)], &[10, 2, 3, 4]);
    rule_adjacent(&mut g, &mut cover);
    show("adjacent", &g, &cover);

    let mut cover = PartialCover::new();
    let mut g = build(3, &[(0, 1), (1, 2)], &[5, 3, 9]);
    rule_degree1(&mut g, &mut cover);
    show("degree-1", &g, &cover);

    // vertices 2, 3, 4 each touch exactly 0 and 1
    let mut cover = PartialCover::new();
    let mut g = build(
        5,
        &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        &[2, 2, 3, 3, 3],
    );
    rule_degree2(&mut g, &mut cover);
    show("degree-2", &g, &cover);

    let mut g = build(6, &[(0, 1), (2, 4), (3, 4), (2, 5)], &[1, 2, 2, 2, 5, 1]);
    let out = reduce(&mut g, ReduceOptions::default());
    show("fixpoint", &g, &out.partial_cover);
    println!(
        "removed by rule: {:?}, passes: {}",
        out.removed_by_rule, out.passes
    );
}
