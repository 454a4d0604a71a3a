mod common;

use mwvc::reduce::applicable_rule;
use mwvc::{
    brute_force_mwvc, lower_bound, packed_lower_bound, random_graph, reduce, solve, EdgeModel,
    ReduceOptions, SolveOptions, WeightModel, WeightedGraph,
};
use proptest::prelude::*;

/// Heaviest independent set by enumeration, written without the library.
fn max_independent_set(g: &WeightedGraph) -> u64 {
    let n = g.capacity();
    let mut adj = vec![0u32; n];
    for (a, b) in g.edges() {
        adj[a.index()] |= 1 << b.index();
        adj[b.index()] |= 1 << a.index();
    }
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        if (0..n).any(|v| mask >> v & 1 == 1 && adj[v] & mask != 0) {
            continue;
        }
        let w: u64 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| g.weight(mwvc::VertexId::new(v)))
            .sum();
        best = best.max(w);
    }
    best
}

fn graph_strategy() -> impl Strategy<Value = WeightedGraph> {
    (1usize..=12, 0.0f64..0.7, 0u32..50, any::<u64>()).prop_map(|(n, p, wmax, seed)| {
        random_graph(
            n,
            EdgeModel::Probability(p),
            WeightModel::Uniform { min: 0, max: wmax },
            seed,
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cover_and_independent_set_are_complementary(g in graph_strategy()) {
        let all: Vec<_> = g.live_vertices().collect();
        let total = g.total_weight(&all);
        let r = solve(&g, &SolveOptions::default());
        prop_assert!(r.optimal);
        prop_assert_eq!(r.weight + max_independent_set(&g), total);
        prop_assert_eq!(brute_force_mwvc(&g).unwrap().weight, r.weight);
    }

    #[test]
    fn reductions_keep_the_optimum(g in graph_strategy(), zero_rule in any::<bool>()) {
        let mut reduced = g.clone();
        let out = reduce(&mut reduced, ReduceOptions { zero_weight_rule: zero_rule });
        prop_assert_eq!(
            out.partial_cover.total_weight() + brute_force_mwvc(&reduced).unwrap().weight,
            brute_force_mwvc(&g).unwrap().weight
        );
        prop_assert!(applicable_rule(&reduced).is_none());
        reduced.audit();
    }

    #[test]
    fn bounds_are_admissible(g in graph_strategy()) {
        let opt = brute_force_mwvc(&g).unwrap().weight;
        let plain = lower_bound(&g);
        let packed = packed_lower_bound(&g);
        prop_assert!(plain <= packed);
        prop_assert!(packed <= opt);
    }
}

#[test]
fn sample_reductions_leave_nothing() {
    let mut g = common::sample();
    let out = reduce(&mut g, ReduceOptions::default());
    assert_eq!(g.num_alive(), 0);
    assert_eq!(out.partial_cover.total_weight(), 5);
}

#[test]
fn corpus_has_expected_shape() {
    let corpus = common::corpus();
    assert_eq!(corpus.len(), 512);
    assert!(corpus
        .iter()
        .all(|i| (1..=16).contains(&i.graph.capacity())));
}
