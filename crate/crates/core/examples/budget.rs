//! Node and time budgets: the solver stops early but still returns a cover.

use std::time::Duration;

use mwvc::{
    random_graph, solve, EdgeModel, ResourceBudget, SolveOptions, WeightModel, WeightScheme,
};

fn main() {
    let g = random_graph(
        400,
        EdgeModel::Count(600),
        WeightModel::Scheme(WeightScheme::IModTwoHundred),
        3,
    );
    let exact = solve(&g, &SolveOptions::default());
    println!(
        "unlimited: weight {} optimal {} nodes {}",
        exact.weight, exact.optimal, exact.stats.search.nodes_explored
    );

    for limit in [1, 10, 100, 1000] {
        let r = solve(
            &g,
            &SolveOptions {
                budget: ResourceBudget::nodes(limit),
                ..SolveOptions::default()
            },
        );
        assert!(g.is_vertex_cover(&r.cover));
        println!(
            "node limit {limit:>5}: weight {} optimal {}",
            r.weight, r.optimal
        );
    }

    let budget = ResourceBudget {
        time_limit: Some(Duration::from_millis(5)),
        node_limit: None,
    };
    let r = solve(
        &g,
        &SolveOptions {
            reductions: false,
            budget,
            ..SolveOptions::default()
        },
    );
    println!(
        "5 ms, no reductions: weight {} optimal {}",
        r.weight, r.optimal
    );
}
