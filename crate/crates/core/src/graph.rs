//! Simple undirected graphs on the vertex set `0..n`.
//!
//! The index order is the total order on vertices. Adjacency is stored twice:
//! sorted neighbor lists for iteration and bit rows for constant-time
//! membership tests.

use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::BitSet;
use crate::coloring::VertexColoring;
use crate::error::GraphError;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<BitSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            rows: (0..n).map(|_| BitSet::new(n)).collect(),
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.rows[u].contains(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
            g.m += 1;
        }
        for (u, row) in g.rows.iter().enumerate() {
            g.adj[u] = row.iter().collect();
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::from_edges(n, edges).expect("complete graph is simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// Star with center 0 and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    /// Wheel: hub 0 joined to a cycle on `1..=rim`.
    pub fn wheel(rim: usize) -> Self {
        let mut b = GraphBuilder::new(rim + 1);
        for i in 0..rim {
            b.edge(0, i + 1);
            b.edge(i + 1, (i + 1) % rim + 1);
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    #[inline]
    pub fn neighbor_row(&self, u: usize) -> &BitSet {
        &self.rows[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Same graph with `extra` isolated vertices appended.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        Graph::from_edges(self.n() + extra, self.edges()).expect("edges stay valid")
    }

    /// Subgraph induced by `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.edge(i, j);
                }
            }
        }
        b.build()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `s`; `usize::MAX` marks unreachable vertices.
    pub fn distances_from(&self, s: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

/// Accumulates edges for constructions; duplicates collapse silently.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_vertices(&mut self, count: usize) -> Vec<usize> {
        (0..count).map(|_| self.add_vertex()).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v, "loop at {u}");
        debug_assert!(u < self.n && v < self.n);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn clique(&mut self, vs: &[usize]) {
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                self.edge(u, v);
            }
        }
    }

    /// Copies `g` with every vertex shifted by `offset`.
    pub fn embed(&mut self, g: &Graph, offset: usize) {
        for (u, v) in g.edges() {
            self.edge(u + offset, v + offset);
        }
    }

    pub fn build(self) -> Graph {
        Graph::from_edges(self.n, self.edges).expect("builder edges are simple")
    }
}

/// `{u, v}` is an edge of the square iff `u` and `v` are at distance 1 or 2.
pub fn square(g: &Graph) -> Graph {
    let mut b = GraphBuilder::new(g.n());
    for u in 0..g.n() {
        for &v in g.neighbors(u) {
            b.edge(u, v);
            for &w in g.neighbors(v) {
                if w != u {
                    b.edge(u, w);
                }
            }
        }
    }
    b.build()
}

/// Proper 2-coloring (colors 1 and 2) if `g` has no odd cycle.
pub fn bipartition(g: &Graph) -> Option<VertexColoring> {
    let mut side = vec![0u32; g.n()];
    for s in 0..g.n() {
        if side[s] != 0 {
            continue;
        }
        side[s] = 1;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if side[v] == 0 {
                    side[v] = 3 - side[u];
                    queue.push_back(v);
                } else if side[v] == side[u] {
                    return None;
                }
            }
        }
    }
    Some(VertexColoring::new(side, 2).expect("sides are 1 or 2"))
}

/// Random graph with maximum degree at most `dmax`, fixed by `seed`.
///
/// Every vertex pair is visited once in a seeded random order and kept with
/// probability 1/2 when both endpoints still have spare degree.
pub fn random_graph_max_degree(n: usize, dmax: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(&mut rng);
    let mut deg = vec![0usize; n];
    let mut b = GraphBuilder::new(n);
    for (u, v) in pairs {
        if deg[u] < dmax && deg[v] < dmax && rng.gen_bool(0.5) {
            deg[u] += 1;
            deg[v] += 1;
            b.edge(u, v);
        }
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(GraphError::OutOfRange { vertex: 3, n: 3 })
        );
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, [(3, 0), (2, 1), (0, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (1, 2)]);
    }

    #[test]
    fn square_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(square(&k2), k2);
        assert_eq!(square(&Graph::path(3)), Graph::complete(3));
        assert_eq!(square(&Graph::cycle(5)), Graph::complete(5));
    }

    #[test]
    fn square_matches_bfs_distances() {
        for seed in 0..40 {
            let g = random_graph_max_degree(10, 3, seed);
            let sq = square(&g);
            for u in 0..g.n() {
                let dist = g.distances_from(u);
                for v in 0..g.n() {
                    let want = u != v && (dist[v] == 1 || dist[v] == 2);
                    assert_eq!(sq.has_edge(u, v), want, "seed {seed} pair {u},{v}");
                }
            }
        }
    }

    #[test]
    fn bipartition_examples() {
        let c4 = bipartition(&Graph::cycle(4)).unwrap();
        assert!(c4.is_proper(&Graph::cycle(4)));
        assert!(bipartition(&Graph::cycle(5)).is_none());
        assert_eq!(bipartition(&Graph::empty(1)).unwrap().colors(), &[1]);
    }

    #[test]
    fn random_graphs_respect_degree_and_seed() {
        assert_eq!(random_graph_max_degree(0, 4, 3).n(), 0);
        assert_eq!(random_graph_max_degree(5, 0, 3).m(), 0);
        let a = random_graph_max_degree(8, 4, 17);
        let b = random_graph_max_degree(8, 4, 17);
        assert_eq!(a, b);
        assert!(a.max_degree() <= 4);
    }
}
