//! Vertex-weighted undirected sparse graph with vertex removal and rollback.
//!
//! Adjacency is stored in compressed rows. Each row is kept partitioned so
//! that the live neighbours of a vertex occupy a prefix whose length is the
//! vertex degree; removing a vertex swaps it out of each neighbour's prefix.
//! Every removal is logged on a trail, and rolling the trail back in LIFO
//! order restores the prefixes exactly (as sets; the order inside a prefix
//! may differ after a rollback).

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`. Never renumbered by removals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(u32);

impl VertexId {
    #[inline]
    pub const fn new(index: usize) -> Self {
        VertexId(index as u32)
    }

    #[inline]
    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(index: usize) -> Self {
        VertexId::new(index)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic vertex weighting for inputs that carry no weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightScheme {
    /// `w(v_i) = (i + 1) mod 200` with `i` the 1-based position of the vertex.
    IModTwoHundred,
    /// Same formula with a 0-based `i`.
    IModTwoHundredZeroBased,
    Constant(u32),
}

impl WeightScheme {
    /// Weight of the vertex with internal (0-based) index `index`.
    pub fn weight(&self, index: usize) -> u32 {
        match *self {
            WeightScheme::IModTwoHundred => ((index + 2) % 200) as u32,
            WeightScheme::IModTwoHundredZeroBased => ((index + 1) % 200) as u32,
            WeightScheme::Constant(k) => k,
        }
    }

    pub fn weights(&self, n: usize) -> Vec<i64> {
        (0..n).map(|i| i64::from(self.weight(i))).collect()
    }
}

impl fmt::Display for WeightScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightScheme::IModTwoHundred => f.write_str("i-mod-200"),
            WeightScheme::IModTwoHundredZeroBased => f.write_str("i-mod-200-zero-based"),
            WeightScheme::Constant(k) => write!(f, "uniform:{k}"),
        }
    }
}

impl std::str::FromStr for WeightScheme {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "i-mod-200" => Ok(WeightScheme::IModTwoHundred),
            "i-mod-200-zero-based" => Ok(WeightScheme::IModTwoHundredZeroBased),
            _ => match s.strip_prefix("uniform:") {
                Some(k) => k
                    .parse()
                    .map(WeightScheme::Constant)
                    .map_err(|_| format!("bad constant weight in `{s}`")),
                None => Err(format!("unknown weight scheme `{s}`")),
            },
        }
    }
}

/// Input normalization counters reported by [`WeightedGraph::build`].
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BuildStats {
    pub edges_read: usize,
    pub duplicate_edges: usize,
    pub self_loops: usize,
}

/// Position on the removal trail. Obtained from [`WeightedGraph::checkpoint`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checkpoint {
    trail_position: usize,
    // serial of the trail entry just below `trail_position`, 0 when empty
    last_serial: u64,
}

#[derive(Debug, Clone, Copy)]
struct TrailEntry {
    vertex: VertexId,
    serial: u64,
}

/// Connected components of the live graph, ordered by smallest member id.
/// Every component lists its vertices in ascending id order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComponentPartition {
    pub components: Vec<Vec<VertexId>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[VertexId]> {
        self.components.iter().map(Vec::as_slice)
    }
}

#[derive(Debug, Clone)]
pub struct WeightedGraph {
    offsets: Vec<usize>,
    slots: Vec<VertexId>,
    // twins[s] is the slot in the other endpoint's row that holds the reverse edge
    twins: Vec<usize>,
    degree: Vec<u32>,
    weights: Vec<u32>,
    alive: Vec<bool>,
    n_alive: usize,
    m_alive: usize,
    trail: Vec<TrailEntry>,
    serial: u64,
}

impl WeightedGraph {
    /// Builds a simple graph from an edge list. Self-loops and repeated edges
    /// are dropped and counted in the returned [`BuildStats`].
    pub fn build(
        n: usize,
        edges: &[(usize, usize)],
        weights: &[i64],
    ) -> Result<(Self, BuildStats)> {
        if weights.len() != n {
            return Err(Error::WeightCountMismatch {
                expected: n,
                found: weights.len(),
            });
        }
        let weights = weights
            .iter()
            .enumerate()
            .map(|(vertex, &weight)| {
                if weight < 0 {
                    Err(Error::NegativeWeight { vertex, weight })
                } else {
                    u32::try_from(weight).map_err(|_| Error::WeightTooLarge { vertex, weight })
                }
            })
            .collect::<Result<Vec<u32>>>()?;

        let mut stats = BuildStats {
            edges_read: edges.len(),
            ..BuildStats::default()
        };
        let mut normalized = Vec::with_capacity(edges.len());
        for (index, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::EdgeOutOfRange { index, u, v, n });
            }
            if u == v {
                stats.self_loops += 1;
                continue;
            }
            normalized.push((u.min(v) as u32, u.max(v) as u32));
        }
        normalized.sort_unstable();
        let before = normalized.len();
        normalized.dedup();
        stats.duplicate_edges = before - normalized.len();

        Ok((Self::from_simple_edges(weights, &normalized), stats))
    }

    /// Edges must be sorted, distinct, with `u < v`.
    fn from_simple_edges(weights: Vec<u32>, edges: &[(u32, u32)]) -> Self {
        let n = weights.len();
        let mut degree = vec![0u32; n];
        for &(u, v) in edges {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0usize;
        offsets.push(0);
        for &d in &degree {
            total += d as usize;
            offsets.push(total);
        }
        let mut fill = offsets[..n].to_vec();
        let mut slots = vec![VertexId(0); total];
        let mut twins = vec![0usize; total];
        for &(u, v) in edges {
            let (u, v) = (u as usize, v as usize);
            let su = fill[u];
            let sv = fill[v];
            fill[u] += 1;
            fill[v] += 1;
            slots[su] = VertexId::new(v);
            slots[sv] = VertexId::new(u);
            twins[su] = sv;
            twins[sv] = su;
        }
        // sorted (u < v) input leaves every row sorted by neighbour id
        WeightedGraph {
            offsets,
            slots,
            twins,
            degree,
            weights,
            alive: vec![true; n],
            n_alive: n,
            m_alive: edges.len(),
            trail: Vec::new(),
            serial: 0,
        }
    }

    /// Number of vertex ids, live or not.
    pub fn capacity(&self) -> usize {
        self.weights.len()
    }

    pub fn num_alive(&self) -> usize {
        self.n_alive
    }

    /// Number of edges between live vertices.
    pub fn num_edges(&self) -> usize {
        self.m_alive
    }

    pub fn is_empty(&self) -> bool {
        self.n_alive == 0
    }

    #[inline]
    pub fn is_alive(&self, v: VertexId) -> bool {
        self.alive.get(v.index()).copied().unwrap_or(false)
    }

    #[inline]
    pub fn weight(&self, v: VertexId) -> u64 {
        u64::from(self.weights[v.index()])
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        debug_assert!(self.is_alive(v), "degree of dead or unknown vertex {v}");
        self.degree[v.index()] as usize
    }

    /// Live neighbours of `v`, in no particular order.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        debug_assert!(self.is_alive(v), "neighbors of dead or unknown vertex {v}");
        let lo = self.offsets[v.index()];
        &self.slots[lo..lo + self.degree[v.index()] as usize]
    }

    pub fn neighborhood_weight(&self, v: VertexId) -> u64 {
        self.neighbors(v).iter().map(|&u| self.weight(u)).sum()
    }

    pub fn total_weight<'a>(&self, vertices: impl IntoIterator<Item = &'a VertexId>) -> u64 {
        vertices.into_iter().map(|&v| self.weight(v)).sum()
    }

    pub fn live_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.alive
            .iter()
            .enumerate()
            .filter(|(_, &a)| a)
            .map(|(i, _)| VertexId::new(i))
    }

    /// Live edges as `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.live_vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| u < v)
                .map(move |&v| (u, v))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        if !self.is_alive(u) || !self.is_alive(v) {
            return false;
        }
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.neighbors(a).contains(&b)
    }

    pub fn remove_vertex(&mut self, v: VertexId) {
        assert!(self.is_alive(v), "remove_vertex: {v} is not a live vertex");
        let lo = self.offsets[v.index()];
        let d = self.degree[v.index()] as usize;
        for s in lo..lo + d {
            let u = self.slots[s].index();
            let t = self.twins[s];
            let last = self.offsets[u] + self.degree[u] as usize - 1;
            self.swap_slots(t, last);
            self.degree[u] -= 1;
        }
        self.alive[v.index()] = false;
        self.n_alive -= 1;
        self.m_alive -= d;
        self.serial += 1;
        self.trail.push(TrailEntry {
            vertex: v,
            serial: self.serial,
        });
    }

    /// Removes `v` and all of its live neighbours. Returns the neighbours.
    pub fn remove_closed_neighborhood(&mut self, v: VertexId) -> Vec<VertexId> {
        let neighbors = self.neighbors(v).to_vec();
        self.remove_vertex(v);
        for &u in &neighbors {
            self.remove_vertex(u);
        }
        neighbors
    }

    #[inline]
    fn swap_slots(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.slots.swap(a, b);
        self.twins.swap(a, b);
        let (ta, tb) = (self.twins[a], self.twins[b]);
        self.twins[ta] = a;
        self.twins[tb] = b;
    }

    fn undo_last(&mut self) {
        let entry = self.trail.pop().expect("undo on an empty trail");
        let v = entry.vertex.index();
        let lo = self.offsets[v];
        let d = self.degree[v] as usize;
        // v sits just past the live prefix of each of these rows
        for s in lo..lo + d {
            let u = self.slots[s].index();
            debug_assert_eq!(self.twins[s], self.offsets[u] + self.degree[u] as usize);
            self.degree[u] += 1;
        }
        self.alive[v] = true;
        self.n_alive += 1;
        self.m_alive += d;
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint {
            trail_position: self.trail.len(),
            last_serial: self.trail.last().map_or(0, |e| e.serial),
        }
    }

    /// Undoes every removal made since `checkpoint` was taken.
    ///
    /// Panics if the checkpoint was invalidated by restoring to an earlier one.
    pub fn restore(&mut self, checkpoint: Checkpoint) {
        let pos = checkpoint.trail_position;
        let valid = pos <= self.trail.len()
            && (pos == 0 || self.trail[pos - 1].serial == checkpoint.last_serial);
        assert!(
            valid,
            "restore: checkpoint was invalidated by an earlier restore"
        );
        while self.trail.len() > pos {
            self.undo_last();
        }
    }

    /// Number of removals currently on the trail.
    pub fn trail_len(&self) -> usize {
        self.trail.len()
    }

    /// Forgets the removal history. Checkpoints taken before are invalidated.
    pub fn clear_trail(&mut self) {
        self.trail.clear();
    }

    pub fn components(&self) -> ComponentPartition {
        let n = self.capacity();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        let mut components = Vec::new();
        for start in self.live_vertices() {
            if seen[start.index()] {
                continue;
            }
            seen[start.index()] = true;
            queue.push_back(start);
            let mut members = Vec::new();
            while let Some(u) = queue.pop_front() {
                members.push(u);
                for &x in self.neighbors(u) {
                    if !seen[x.index()] {
                        seen[x.index()] = true;
                        queue.push_back(x);
                    }
                }
            }
            members.sort_unstable();
            components.push(members);
        }
        ComponentPartition { components }
    }

    /// Fresh graph induced by `vertices` (all live). Vertex `vertices[i]`
    /// becomes id `i` in the result.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> WeightedGraph {
        let mut local = vec![u32::MAX; self.capacity()];
        for (i, &v) in vertices.iter().enumerate() {
            assert!(self.is_alive(v), "induced_subgraph: {v} is not live");
            local[v.index()] = i as u32;
        }
        let mut edges = Vec::new();
        for &v in vertices {
            let a = local[v.index()];
            for &u in self.neighbors(v) {
                let b = local[u.index()];
                if b != u32::MAX && a < b {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();
        let weights = vertices.iter().map(|&v| self.weights[v.index()]).collect();
        Self::from_simple_edges(weights, &edges)
    }

    /// Whether every live edge has an endpoint in `cover`. On a graph with no
    /// removals this is the plain vertex-cover test.
    pub fn is_vertex_cover(&self, cover: &[VertexId]) -> bool {
        let mut inside = vec![false; self.capacity()];
        for &v in cover {
            if let Some(slot) = inside.get_mut(v.index()) {
                *slot = true;
            }
        }
        self.edges()
            .all(|(u, v)| inside[u.index()] || inside[v.index()])
    }

    /// Live vertex set with sorted live adjacency, for structural comparison.
    pub fn structure(&self) -> Vec<Option<Vec<VertexId>>> {
        (0..self.capacity())
            .map(VertexId::new)
            .map(|v| {
                self.is_alive(v).then(|| {
                    let mut row = self.neighbors(v).to_vec();
                    row.sort_unstable();
                    row
                })
            })
            .collect()
    }

    pub fn same_structure(&self, other: &WeightedGraph) -> bool {
        self.weights == other.weights && self.structure() == other.structure()
    }

    /// Walks the whole structure and panics on any broken invariant.
    pub fn audit(&self) {
        let mut edges = 0usize;
        let mut alive = 0usize;
        for v in self.live_vertices() {
            alive += 1;
            let row = self.neighbors(v);
            edges += row.len();
            let lo = self.offsets[v.index()];
            for (i, &u) in row.iter().enumerate() {
                assert_ne!(u, v, "self-loop at {v}");
                assert!(self.is_alive(u), "{v} lists dead neighbour {u}");
                assert!(self.neighbors(u).contains(&v), "asymmetric edge {v} -> {u}");
                assert_eq!(self.twins[self.twins[lo + i]], lo + i, "broken twin at {v}");
                assert_eq!(
                    self.slots[self.twins[lo + i]],
                    v,
                    "twin of {v}->{u} misplaced"
                );
            }
            let mut sorted = row.to_vec();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), row.len(), "parallel edge at {v}");
        }
        assert_eq!(alive, self.n_alive, "live count drifted");
        assert_eq!(edges, 2 * self.m_alive, "edge count drifted");
    }
}
