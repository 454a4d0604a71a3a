//! Removal and rollback checked against a plain copy-based model.

use mwvc::{random_graph, EdgeModel, VertexId, WeightModel, WeightedGraph};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Op {
    Remove(usize),
    RemoveClosed(usize),
    Checkpoint,
    Restore,
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        4 => (0..50usize).prop_map(Op::Remove),
        2 => (0..50usize).prop_map(Op::RemoveClosed),
        2 => Just(Op::Checkpoint),
        2 => Just(Op::Restore),
    ]
}

struct Model {
    adjacency: Vec<Vec<usize>>,
    alive: Vec<bool>,
}

impl Model {
    fn new(g: &WeightedGraph) -> Self {
        let n = g.capacity();
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in g.edges() {
            adjacency[a.index()].push(b.index());
            adjacency[b.index()].push(a.index());
        }
        Model {
            adjacency,
            alive: vec![true; n],
        }
    }

    fn structure(&self) -> Vec<Option<Vec<VertexId>>> {
        (0..self.alive.len())
            .map(|v| {
                self.alive[v].then(|| {
                    let mut row: Vec<_> = self.adjacency[v]
                        .iter()
                        .filter(|&&u| self.alive[u])
                        .map(|&u| VertexId::new(u))
                        .collect();
                    row.sort_unstable();
                    row
                })
            })
            .collect()
    }

    fn edges(&self) -> usize {
        (0..self.alive.len())
            .filter(|&v| self.alive[v])
            .map(|v| self.adjacency[v].iter().filter(|&&u| self.alive[u]).count())
            .sum::<usize>()
            / 2
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn interleaved_removals_and_restores(seed in 0u64..10_000, p in 0.02f64..0.3, ops in prop::collection::vec(op(), 1..60)) {
        let mut g = random_graph(50, EdgeModel::Probability(p), WeightModel::Uniform { min: 0, max: 9 }, seed);
        let original = g.clone();
        let root = g.checkpoint();
        let mut model = Model::new(&g);
        let mut stack = Vec::new();

        for op in ops {
            match op {
                Op::Remove(v) => {
                    if model.alive[v] {
                        g.remove_vertex(VertexId::new(v));
                        model.alive[v] = false;
                    }
                }
                Op::RemoveClosed(v) => {
                    if model.alive[v] {
                        let mut expected: Vec<_> = model.adjacency[v]
                            .iter()
                            .copied()
                            .filter(|&u| model.alive[u])
                            .collect();
                        expected.sort_unstable();
                        let mut removed: Vec<_> = g
                            .remove_closed_neighborhood(VertexId::new(v))
                            .iter()
                            .map(|u| u.index())
                            .collect();
                        removed.sort_unstable();
                        prop_assert_eq!(removed, expected.clone());
                        model.alive[v] = false;
                        for u in expected {
                            model.alive[u] = false;
                        }
                    }
                }
                Op::Checkpoint => stack.push((g.checkpoint(), model.alive.clone())),
                Op::Restore => {
                    if let Some((cp, alive)) = stack.pop() {
                        g.restore(cp);
                        model.alive = alive;
                    }
                }
            }
            g.audit();
            prop_assert_eq!(g.structure(), model.structure());
            prop_assert_eq!(g.num_alive(), model.alive.iter().filter(|&&a| a).count());
            prop_assert_eq!(g.num_edges(), model.edges());
        }

        g.restore(root);
        prop_assert_eq!(g.trail_len(), 0);
        prop_assert!(g.same_structure(&original));
    }
}

#[test]
#[should_panic(expected = "invalidated")]
fn stale_checkpoint_is_rejected() {
    let mut g = random_graph(
        10,
        EdgeModel::Probability(0.4),
        WeightModel::Uniform { min: 1, max: 5 },
        7,
    );
    let outer = g.checkpoint();
    g.remove_vertex(VertexId::new(0));
    let inner = g.checkpoint();
    g.remove_vertex(VertexId::new(1));
    g.restore(outer);
    g.remove_vertex(VertexId::new(2));
    g.remove_vertex(VertexId::new(3));
    g.restore(inner);
}
