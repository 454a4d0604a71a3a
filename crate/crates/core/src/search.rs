//! Branch-and-bound search and the top-level solve driver.
//!
//! `solve` reduces the graph, splits what is left into connected components
//! and runs an independent depth-first search on each one, seeded with the
//! whole component as incumbent. Each search node either closes (no edges
//! left), prunes on `lower_bound + w(S) >= w(best)`, or branches on a vertex
//! `v`: first with `v` in the cover, then with `N(v)` in the cover.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::bound::CliquePartitioner;
use crate::branch::{BranchSelector, HeuristicChoice};
use crate::graph::{VertexId, WeightedGraph};
use crate::reduce::{reduce, PartialCover, ReduceOptions, ReductionOutcome};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ResourceBudget {
    /// Wall-clock limit for the whole solve.
    pub time_limit: Option<Duration>,
    /// Search-node limit, applied to each component search separately.
    pub node_limit: Option<u64>,
}

impl ResourceBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn nodes(limit: u64) -> Self {
        ResourceBudget {
            node_limit: Some(limit),
            ..Self::default()
        }
    }
}

/// Best complete cover found so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Incumbent {
    pub cover: Vec<VertexId>,
    pub weight: u64,
}

impl Incumbent {
    /// Every live vertex of `g`.
    pub fn all_vertices(g: &WeightedGraph) -> Self {
        let cover: Vec<_> = g.live_vertices().collect();
        let weight = g.total_weight(&cover);
        Incumbent { cover, weight }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes_explored: u64,
    pub prunes: u64,
    pub max_depth: usize,
    pub improvements: u64,
}

impl SearchStats {
    fn merge(&mut self, other: &SearchStats) {
        self.nodes_explored += other.nodes_explored;
        self.prunes += other.prunes;
        self.max_depth = self.max_depth.max(other.max_depth);
        self.improvements += other.improvements;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub incumbent: Incumbent,
    pub stats: SearchStats,
    /// False when a budget stopped the search before it finished.
    pub completed: bool,
}

#[derive(Debug, Clone, Copy)]
struct Limits {
    deadline: Option<Instant>,
    node_limit: Option<u64>,
}

/// Stack reserved for a search thread. Recursion depth is bounded by the
/// number of vertices in the searched graph.
const SEARCH_STACK_BYTES: usize = 256 << 20;

fn with_search_stack<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    std::thread::scope(|scope| {
        std::thread::Builder::new()
            .name("mwvc-search".into())
            .stack_size(SEARCH_STACK_BYTES)
            .spawn_scoped(scope, f)
            .expect("failed to spawn search thread")
            .join()
            .unwrap_or_else(|panic| std::panic::resume_unwind(panic))
    })
}

/// A cover of the graph at some node, with its weight.
type Found = Option<(u64, Vec<VertexId>)>;

struct Searcher {
    config: SearchConfig,
    selector: BranchSelector,
    partitioner: CliquePartitioner,
    limits: Limits,
    stats: SearchStats,
    aborted: bool,
    seen: Vec<bool>,
    queue: Vec<VertexId>,
}

impl Searcher {
    fn new(config: SearchConfig, limits: Limits) -> Self {
        Searcher {
            config,
            selector: BranchSelector::new(config.heuristic, config.stream),
            partitioner: CliquePartitioner::new(),
            limits,
            stats: SearchStats::default(),
            aborted: false,
            seen: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn out_of_budget(&self) -> bool {
        if let Some(limit) = self.limits.node_limit {
            if self.stats.nodes_explored >= limit {
                return true;
            }
        }
        matches!(self.limits.deadline, Some(d) if Instant::now() >= d)
    }

    /// Lightest cover of the live part of `g` with weight strictly below
    /// `limit`, or `None` if there is none (or the budget ran out first).
    ///
    /// `limit` plays the role of `w(best) - w(S)` in the usual formulation:
    /// pruning on `bound >= limit` is pruning on `bound + w(S) >= w(best)`.
    /// `g` is left as it was found.
    fn min_cover(&mut self, g: &mut WeightedGraph, limit: u64, depth: usize) -> Found {
        if self.out_of_budget() {
            self.aborted = true;
            return None;
        }
        self.stats.nodes_explored += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        let entry = g.checkpoint();
        let found = self.expand(g, limit, depth);
        g.restore(entry);
        found
    }

    fn expand(&mut self, g: &mut WeightedGraph, limit: u64, depth: usize) -> Found {
        let mut forced = Vec::new();
        let mut limit = limit;
        if self.config.in_search_reductions && g.num_edges() > 0 {
            let outcome = reduce(
                g,
                ReduceOptions {
                    zero_weight_rule: self.config.zero_weight_rule,
                },
            );
            let cost = outcome.partial_cover.total_weight();
            if cost >= limit {
                self.stats.prunes += 1;
                return None;
            }
            limit -= cost;
            forced = outcome.partial_cover.members().to_vec();
        }

        if g.num_edges() == 0 {
            if limit == 0 {
                return None;
            }
            self.stats.improvements += 1;
            return Some((limit_cost(g, &forced), forced));
        }

        if self.bound_reaches(g, limit) {
            self.stats.prunes += 1;
            return None;
        }

        let found = if self.config.dynamic_components && !self.edges_connected(g) {
            let parts = g.components();
            let pieces: Vec<&Vec<VertexId>> =
                parts.components.iter().filter(|c| c.len() > 1).collect();
            if pieces.len() > 1 {
                self.split(g, &pieces, limit, depth)
            } else {
                self.branch(g, limit, depth)
            }
        } else {
            self.branch(g, limit, depth)
        };

        found.map(|(w, cover)| {
            let extra = limit_cost(g, &forced);
            forced.extend(cover);
            (w + extra, forced)
        })
    }

    /// Whether all vertices with an edge lie in one component.
    fn edges_connected(&mut self, g: &WeightedGraph) -> bool {
        self.seen.clear();
        self.seen.resize(g.capacity(), false);
        let mut with_edges = 0usize;
        let mut start = None;
        for v in g.live_vertices() {
            if g.degree(v) > 0 {
                with_edges += 1;
                start.get_or_insert(v);
            }
        }
        let Some(start) = start else { return true };
        self.queue.clear();
        self.queue.push(start);
        self.seen[start.index()] = true;
        let mut reached = 0usize;
        while let Some(u) = self.queue.pop() {
            reached += 1;
            for &x in g.neighbors(u) {
                if !self.seen[x.index()] {
                    self.seen[x.index()] = true;
                    self.queue.push(x);
                }
            }
        }
        reached == with_edges
    }

    fn bound_reaches(&mut self, g: &WeightedGraph, limit: u64) -> bool {
        if !self.config.use_lower_bound {
            return false;
        }
        self.partitioner.packed_bound_with_cutoff(g, limit) >= limit
    }

    /// Include `v`, then include `N(v)`.
    fn branch(&mut self, g: &mut WeightedGraph, limit: u64, depth: usize) -> Found {
        let v = self.selector.select(g);
        let mut best: Found = None;
        let mut limit = limit;

        let checkpoint = g.checkpoint();
        let wv = g.weight(v);
        g.remove_vertex(v);
        let child = self.min_cover(g, limit.saturating_sub(wv), depth + 1);
        g.restore(checkpoint);
        if let Some((w, mut cover)) = child {
            cover.push(v);
            limit = w + wv;
            best = Some((limit, cover));
        }
        if self.aborted {
            return best;
        }

        let wn = g.neighborhood_weight(v);
        let neighbors = g.remove_closed_neighborhood(v);
        let child = self.min_cover(g, limit.saturating_sub(wn), depth + 1);
        g.restore(checkpoint);
        if let Some((w, mut cover)) = child {
            cover.extend(neighbors);
            best = Some((w + wn, cover));
        }
        best
    }

    /// Solves independent components one at a time. Each gets whatever room
    /// is left under `limit` after the others' lower bounds.
    fn split(
        &mut self,
        g: &WeightedGraph,
        pieces: &[&Vec<VertexId>],
        limit: u64,
        depth: usize,
    ) -> Found {
        let mut subs: Vec<(&Vec<VertexId>, WeightedGraph, u64)> = pieces
            .iter()
            .map(|members| {
                let sub = g.induced_subgraph(members);
                let lb = if self.config.use_lower_bound {
                    self.partitioner.packed_bound_with_cutoff(&sub, u64::MAX)
                } else {
                    0
                };
                (*members, sub, lb)
            })
            .collect();
        subs.sort_by_key(|(members, _, _)| (members.len(), members[0]));

        let mut rest: u64 = subs.iter().map(|s| s.2).sum();
        if rest >= limit {
            self.stats.prunes += 1;
            return None;
        }
        let mut spent = 0u64;
        let mut cover = Vec::new();
        for (members, sub, lb) in &mut subs {
            rest -= *lb;
            let room = limit - spent - rest;
            let (w, local) = self.min_cover(sub, room, depth + 1)?;
            spent += w;
            cover.extend(local.into_iter().map(|u| members[u.index()]));
        }
        Some((spent, cover))
    }
}

fn limit_cost(g: &WeightedGraph, vertices: &[VertexId]) -> u64 {
    g.total_weight(vertices)
}

#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub heuristic: HeuristicChoice,
    /// Separates H2 random streams of searches sharing one seed.
    pub stream: u64,
    /// When false the lower bound is taken as 0. Test hook.
    pub use_lower_bound: bool,
    /// Re-run the reduction rules at every search node.
    pub in_search_reductions: bool,
    /// Solve the components of a disconnected node independently.
    pub dynamic_components: bool,
    pub zero_weight_rule: bool,
}

impl SearchConfig {
    /// Branching exactly as written: no reductions or splitting below the root.
    pub fn plain(heuristic: HeuristicChoice) -> Self {
        SearchConfig {
            heuristic,
            stream: 0,
            use_lower_bound: true,
            in_search_reductions: false,
            dynamic_components: false,
            zero_weight_rule: false,
        }
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig::plain(HeuristicChoice::default())
    }
}

/// Depth-first branch and bound over `g`, extending `partial`.
///
/// Returns the best cover found. It beats `incumbent` only if a strictly
/// lighter cover exists and was reached within budget. The graph is restored
/// to its entry state before returning.
pub fn search(
    g: &mut WeightedGraph,
    partial: &PartialCover,
    incumbent: Incumbent,
    config: SearchConfig,
    budget: ResourceBudget,
) -> SearchOutcome {
    let limits = Limits {
        deadline: budget.time_limit.map(|t| Instant::now() + t),
        node_limit: budget.node_limit,
    };
    with_search_stack(|| search_with_limits(g, partial, incumbent, config, limits))
}

fn search_with_limits(
    g: &mut WeightedGraph,
    partial: &PartialCover,
    incumbent: Incumbent,
    config: SearchConfig,
    limits: Limits,
) -> SearchOutcome {
    let mut searcher = Searcher::new(config, limits);
    let room = incumbent.weight.saturating_sub(partial.total_weight());
    let found = searcher.min_cover(g, room, 0);
    let incumbent = match found {
        Some((w, cover)) => {
            let mut members = partial.members().to_vec();
            members.extend(cover);
            Incumbent {
                cover: members,
                weight: partial.total_weight() + w,
            }
        }
        None => incumbent,
    };
    SearchOutcome {
        incumbent,
        stats: searcher.stats,
        completed: !searcher.aborted,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveOptions {
    pub heuristic: HeuristicChoice,
    pub budget: ResourceBudget,
    pub reductions: bool,
    pub zero_weight_rule: bool,
    pub parallel_components: bool,
    /// When false the lower bound is taken as 0. Test hook.
    pub use_lower_bound: bool,
    /// Re-run the reduction rules at every search node. Ignored when
    /// `reductions` is off.
    pub in_search_reductions: bool,
    /// Split search nodes whose graph has fallen apart into components.
    pub dynamic_components: bool,
}

impl SolveOptions {
    /// Root reductions only, branching exactly as in the textbook scheme.
    pub fn plain() -> Self {
        SolveOptions {
            in_search_reductions: false,
            dynamic_components: false,
            ..Self::default()
        }
    }
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            heuristic: HeuristicChoice::default(),
            budget: ResourceBudget::default(),
            reductions: true,
            zero_weight_rule: false,
            parallel_components: false,
            use_lower_bound: true,
            in_search_reductions: true,
            dynamic_components: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveStats {
    pub search: SearchStats,
    /// `None` when reductions were disabled.
    pub reduction: Option<ReductionOutcome>,
    pub remaining_vertices: usize,
    pub remaining_edges: usize,
    /// Vertex count of each component handed to search, in solve order.
    pub component_sizes: Vec<usize>,
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Ascending ids of the original graph.
    pub cover: Vec<VertexId>,
    pub weight: u64,
    pub optimal: bool,
    pub stats: SolveStats,
}

struct ComponentResult {
    cover: Vec<VertexId>,
    stats: SearchStats,
    completed: bool,
}

fn solve_component(
    g: &WeightedGraph,
    members: &[VertexId],
    index: usize,
    options: &SolveOptions,
    deadline: Option<Instant>,
) -> ComponentResult {
    let mut sub = g.induced_subgraph(members);
    if sub.num_edges() == 0 {
        return ComponentResult {
            cover: Vec::new(),
            stats: SearchStats::default(),
            completed: true,
        };
    }
    let config = SearchConfig {
        heuristic: options.heuristic,
        stream: index as u64,
        use_lower_bound: options.use_lower_bound,
        in_search_reductions: options.reductions && options.in_search_reductions,
        dynamic_components: options.dynamic_components,
        zero_weight_rule: options.zero_weight_rule,
    };
    let limits = Limits {
        deadline,
        node_limit: options.budget.node_limit,
    };
    let incumbent = Incumbent::all_vertices(&sub);
    let outcome = search_with_limits(&mut sub, &PartialCover::new(), incumbent, config, limits);
    ComponentResult {
        cover: outcome
            .incumbent
            .cover
            .iter()
            .map(|&u| members[u.index()])
            .collect(),
        stats: outcome.stats,
        completed: outcome.completed,
    }
}

/// Minimum weight vertex cover of `g`.
///
/// With `optimal == true` the returned weight is the minimum. On budget
/// expiry the best cover found so far is returned, still a valid cover.
pub fn solve(g: &WeightedGraph, options: &SolveOptions) -> SolveResult {
    let started = Instant::now();
    let deadline = options.budget.time_limit.map(|t| started + t);

    let mut work = g.clone();
    work.clear_trail();
    let reduction = options.reductions.then(|| {
        reduce(
            &mut work,
            ReduceOptions {
                zero_weight_rule: options.zero_weight_rule,
            },
        )
    });
    let remaining_vertices = work.num_alive();
    let remaining_edges = work.num_edges();
    let components = work.components();

    let results: Vec<ComponentResult> = if options.parallel_components {
        let pool = rayon::ThreadPoolBuilder::new()
            .stack_size(SEARCH_STACK_BYTES)
            .build()
            .expect("failed to build search thread pool");
        pool.install(|| {
            components
                .components
                .par_iter()
                .enumerate()
                .map(|(i, c)| solve_component(&work, c, i, options, deadline))
                .collect()
        })
    } else {
        with_search_stack(|| {
            components
                .iter()
                .enumerate()
                .map(|(i, c)| solve_component(&work, c, i, options, deadline))
                .collect()
        })
    };

    let mut cover: Vec<VertexId> = reduction
        .as_ref()
        .map(|r| r.partial_cover.members().to_vec())
        .unwrap_or_default();
    let mut search = SearchStats::default();
    let mut optimal = true;
    for r in &results {
        cover.extend_from_slice(&r.cover);
        search.merge(&r.stats);
        optimal &= r.completed;
    }
    cover.sort_unstable();
    let weight = g.total_weight(&cover);
    assert!(
        g.is_vertex_cover(&cover),
        "solver produced a set that does not cover the input graph"
    );

    SolveResult {
        cover,
        weight,
        optimal,
        stats: SolveStats {
            search,
            reduction,
            remaining_vertices,
            remaining_edges,
            component_sizes: components.components.iter().map(Vec::len).collect(),
            wall_time: started.elapsed(),
        },
    }
}
