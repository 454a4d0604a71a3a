//! Clique partition and the bounds derived from it, next to the optimum.

use mwvc::{brute_force_mwvc, clique_partition, lower_bound, packed_lower_bound, WeightedGraph};

fn main() {
    // a triangle with a pendant path and a heavy star
    let edges = [
        (0, 1),
        (1, 2),
        (0, 2),
        (2, 3),
        (3, 4),
        (5, 6),
        (5, 7),
        (5, 8),
    ];
    let (g, _) = WeightedGraph::build(9, &edges, &[3, 4, 5, 2, 6, 20, 4, 5, 6]).unwrap();

    for clique in clique_partition(&g).cliques {
        let ids: Vec<String> = clique
            .iter()
            .map(|v| format!("{v}(w={})", g.weight(*v)))
            .collect();
        println!("clique {{{}}}", ids.join(", "));
    }
    println!("clique bound:  {}", lower_bound(&g));
    println!("packed bound:  {}", packed_lower_bound(&g));
    println!("optimum:       {}", brute_force_mwvc(&g).unwrap().weight);
}
