#![allow(dead_code)]

use std::fmt::Write as _;
use std::path::Path;

use mwvc::{random_graph, EdgeModel, WeightModel, WeightScheme, WeightedGraph};

pub const DENSITIES: [f64; 4] = [0.05, 0.1, 0.3, 0.5];
pub const REPEATS: u64 = 4;

pub struct Instance {
    pub label: String,
    pub graph: WeightedGraph,
}

fn weight_models() -> [(&'static str, WeightModel); 2] {
    [
        ("uniform", WeightModel::Uniform { min: 0, max: 199 }),
        (
            "i-mod-200",
            WeightModel::Scheme(WeightScheme::IModTwoHundred),
        ),
    ]
}

/// 512 seeded graphs: n in 1..=16, four edge densities, both weight models,
/// four repeats each.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 1..=16usize {
        for (pi, &p) in DENSITIES.iter().enumerate() {
            for (wi, (wname, model)) in weight_models().into_iter().enumerate() {
                for r in 0..REPEATS {
                    let seed = ((n as u64 * 4 + pi as u64) * 2 + wi as u64) * REPEATS + r;
                    out.push(Instance {
                        label: format!("n={n} p={p} w={wname} seed={seed}"),
                        graph: random_graph(n, EdgeModel::Probability(p), model, seed),
                    });
                }
            }
        }
    }
    out
}

pub const SAMPLE_EDGES: [(usize, usize); 4] = [(0, 1), (2, 4), (3, 4), (2, 5)];
pub const SAMPLE_WEIGHTS: [i64; 6] = [1, 2, 2, 2, 5, 1];
pub const SAMPLE_B_WEIGHTS: [i64; 6] = [1, 2, 2, 2, 5, 3];

pub fn sample() -> WeightedGraph {
    WeightedGraph::build(6, &SAMPLE_EDGES, &SAMPLE_WEIGHTS)
        .unwrap()
        .0
}

pub fn sample_b() -> WeightedGraph {
    WeightedGraph::build(6, &SAMPLE_EDGES, &SAMPLE_B_WEIGHTS)
        .unwrap()
        .0
}

/// Weighted DIMACS text with 1-based ids.
pub fn dimacs(g: &WeightedGraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "p edge {} {}", g.capacity(), g.num_edges());
    for v in g.live_vertices() {
        let _ = writeln!(s, "n {} {}", v.index() + 1, g.weight(v));
    }
    for (a, b) in g.edges() {
        let _ = writeln!(s, "e {} {}", a.index() + 1, b.index() + 1);
    }
    s
}

pub fn write_dimacs(path: &Path, g: &WeightedGraph) {
    std::fs::write(path, dimacs(g)).unwrap();
}
