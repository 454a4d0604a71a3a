//! Compares the four branching heuristics on the same instances.
//!
//! ```text
//! cargo run --release --example heuristics -- [n] [m] [instances]
//! ```

use mwvc::{
    random_graph, solve, EdgeModel, Heuristic, HeuristicChoice, SolveOptions, WeightModel,
    WeightScheme,
};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let n = args.next().unwrap_or(200);
    let m = args.next().unwrap_or(300);
    let instances = args.next().unwrap_or(4) as u64;

    println!(
        "{:>4} {:>8} {:>10} {:>10} {:>10} {:>10}",
        "seed", "weight", "h1", "h2", "h3", "h4"
    );
    for seed in 0..instances {
        let g = random_graph(
            n,
            EdgeModel::Count(m),
            WeightModel::Scheme(WeightScheme::IModTwoHundred),
            seed,
        );
        let mut weight = None;
        let mut nodes = Vec::new();
        for kind in [Heuristic::H1, Heuristic::H2, Heuristic::H3, Heuristic::H4] {
            let r = solve(
                &g,
                &SolveOptions {
                    heuristic: HeuristicChoice::new(kind, seed),
                    ..SolveOptions::default()
                },
            );
            assert_eq!(
                *weight.get_or_insert(r.weight),
                r.weight,
                "heuristics disagree"
            );
            nodes.push(r.stats.search.nodes_explored);
        }
        println!(
            "{seed:>4} {:>8} {:>10} {:>10} {:>10} {:>10}",
            weight.unwrap(),
            nodes[0],
            nodes[1],
            nodes[2],
            nodes[3]
        );
    }
}
