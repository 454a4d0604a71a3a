//! Checks the solver against exhaustive search on random small graphs.

use mwvc::{brute_force_mwvc, random_graph, solve, EdgeModel, SolveOptions, WeightModel};

fn main() {
    let mut checked = 0;
    for seed in 0..400u64 {
        let n = 1 + (seed % 18) as usize;
        let p = [0.05, 0.1, 0.3, 0.5][(seed % 4) as usize];
        let g = random_graph(
            n,
            EdgeModel::Probability(p),
            WeightModel::Uniform { min: 0, max: 199 },
            seed,
        );
        let oracle = brute_force_mwvc(&g).unwrap();
        let result = solve(&g, &SolveOptions::default());
        assert!(result.optimal);
        assert_eq!(result.weight, oracle.weight, "seed {seed}");
        checked += 1;
    }
    println!("{checked} instances agree with exhaustive search");
}
