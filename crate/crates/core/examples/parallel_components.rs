//! A graph made of many disjoint pieces, solved sequentially and on a thread
//! pool. Both runs return the same cover.

use std::time::Instant;

use mwvc::{
    random_graph, solve, EdgeModel, SolveOptions, WeightModel, WeightScheme, WeightedGraph,
};

fn main() {
    let pieces = 12;
    let piece = random_graph(
        60,
        EdgeModel::Count(95),
        WeightModel::Scheme(WeightScheme::IModTwoHundred),
        1,
    );
    let mut edges = Vec::new();
    let mut weights = Vec::new();
    for k in 0..pieces {
        let off = k * piece.capacity();
        edges.extend(
            piece
                .edges()
                .map(|(a, b)| (a.index() + off, b.index() + off)),
        );
        weights.extend(
            piece
                .live_vertices()
                .map(|v| ((v.index() * 7 + k * 13) % 50 + 1) as i64),
        );
    }
    let (g, _) = WeightedGraph::build(pieces * piece.capacity(), &edges, &weights).unwrap();

    let t = Instant::now();
    let seq = solve(&g, &SolveOptions::default());
    let t_seq = t.elapsed();
    let t = Instant::now();
    let par = solve(
        &g,
        &SolveOptions {
            parallel_components: true,
            ..SolveOptions::default()
        },
    );
    let t_par = t.elapsed();

    assert_eq!(seq.cover, par.cover);
    println!("components searched: {}", seq.stats.component_sizes.len());
    println!(
        "weight {} ({} nodes)",
        seq.weight, seq.stats.search.nodes_explored
    );
    println!(
        "sequential {:.3} s, parallel {:.3} s",
        t_seq.as_secs_f64(),
        t_par.as_secs_f64()
    );
}
