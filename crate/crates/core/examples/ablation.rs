//! Search effort with and without the reduction rules on seeded sparse graphs.
//!
//! ```text
//! cargo run --release --example ablation -- [instances] [n] [m]
//! ```

use std::time::Instant;

use mwvc::{random_graph, solve, EdgeModel, SolveOptions, WeightModel, WeightScheme};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse::<usize>().expect("numeric argument"));
    let instances = args.next().unwrap_or(5);
    let n = args.next().unwrap_or(200);
    let m = args.next().unwrap_or(300);

    println!(
        "{:>4} {:>8} {:>8} {:>12} {:>12} {:>9} {:>9}",
        "seed", "weight", "kernel", "nodes(red)", "nodes(none)", "t(red)", "t(none)"
    );
    for seed in 0..instances as u64 {
        let g = random_graph(
            n,
            EdgeModel::Count(m),
            WeightModel::Scheme(WeightScheme::IModTwoHundred),
            seed,
        );
        let t = Instant::now();
        let with = solve(&g, &SolveOptions::default());
        let t_with = t.elapsed();
        let t = Instant::now();
        let without = solve(
            &g,
            &SolveOptions {
                reductions: false,
                ..SolveOptions::default()
            },
        );
        let t_without = t.elapsed();
        assert_eq!(with.weight, without.weight, "seed {seed}: weights disagree");
        println!(
            "{seed:>4} {:>8} {:>8} {:>12} {:>12} {:>8.3}s {:>8.3}s",
            with.weight,
            with.stats.remaining_vertices,
            with.stats.search.nodes_explored,
            without.stats.search.nodes_explored,
            t_with.as_secs_f64(),
            t_without.as_secs_f64(),
        );
    }
}
