//! Vertex partitions into buckets, edge-preserving groupings with
//! square-coloring labels, and the spanning-tree partition used for
//! degree-five inputs.

use std::collections::VecDeque;

use crate::coloring::greedy_coloring;
use crate::error::GraphError;
use crate::graph::{square, Graph, GraphBuilder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    buckets: Vec<Vec<usize>>,
    capacity: usize,
}

impl Partition {
    /// Buckets are sorted internally; their order is kept as given.
    pub fn new(mut buckets: Vec<Vec<usize>>, capacity: usize) -> Result<Self, GraphError> {
        if capacity == 0 {
            return Err(GraphError::InvalidPartition(
                "capacity must be positive".into(),
            ));
        }
        for b in &mut buckets {
            if b.is_empty() {
                return Err(GraphError::InvalidPartition("empty bucket".into()));
            }
            if b.len() > capacity {
                return Err(GraphError::InvalidPartition(format!(
                    "bucket of size {} exceeds capacity {capacity}",
                    b.len()
                )));
            }
            b.sort_unstable();
        }
        Ok(Partition { buckets, capacity })
    }

    /// `{0..r-1}, {r..2r-1}, ...`; the last bucket may be short.
    pub fn consecutive(n: usize, r: usize) -> Result<Self, GraphError> {
        if r == 0 {
            return Err(GraphError::InvalidPartition(
                "capacity must be positive".into(),
            ));
        }
        let buckets = (0..n)
            .step_by(r)
            .map(|s| (s..(s + r).min(n)).collect())
            .collect();
        Partition::new(buckets, r)
    }

    pub fn buckets(&self) -> &[Vec<usize>] {
        &self.buckets
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.buckets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.is_empty()
    }

    /// Checks that the buckets are disjoint and cover `0..n`; returns the
    /// bucket index of every vertex.
    pub fn bucket_of(&self, n: usize) -> Result<Vec<usize>, GraphError> {
        let mut owner = vec![usize::MAX; n];
        for (i, b) in self.buckets.iter().enumerate() {
            for &v in b {
                if v >= n {
                    return Err(GraphError::OutOfRange { vertex: v, n });
                }
                if owner[v] != usize::MAX {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} in two buckets"
                    )));
                }
                owner[v] = i;
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        Ok(owner)
    }
}

#[derive(Debug, Clone)]
pub struct LabeledGrouping {
    pub base: Graph,
    pub partition: Partition,
    /// One vertex per bucket; internal edges of a bucket are dropped.
    pub bucket_graph: Graph,
    /// Label of each bucket in `1..=label_count`, a proper coloring of the
    /// square of `bucket_graph`.
    pub labels: Vec<u32>,
    pub label_count: u32,
    pub bucket_of: Vec<usize>,
}

impl LabeledGrouping {
    pub fn label(&self, bucket: usize) -> u32 {
        self.labels[bucket]
    }

    /// Position of `v` inside its bucket.
    pub fn position(&self, v: usize) -> usize {
        let b = &self.partition.buckets()[self.bucket_of[v]];
        b.binary_search(&v).expect("vertex lies in its bucket")
    }
}

/// Quotient graph on buckets, with buckets adjacent iff some edge of `g`
/// crosses between them.
pub fn bucket_graph(g: &Graph, p: &Partition) -> Result<(Graph, Vec<usize>), GraphError> {
    let owner = p.bucket_of(g.n())?;
    let mut b = GraphBuilder::new(p.len());
    for (u, v) in g.edges() {
        if owner[u] != owner[v] {
            b.edge(owner[u], owner[v]);
        }
    }
    Ok((b.build(), owner))
}

pub fn build_grouping(g: &Graph, p: &Partition) -> Result<LabeledGrouping, GraphError> {
    let (bucket_graph, bucket_of) = bucket_graph(g, p)?;
    let coloring = greedy_coloring(&square(&bucket_graph));
    let d = bucket_graph.max_degree();
    let label_count = coloring.k();
    debug_assert!(label_count as usize <= d * d + 1);
    Ok(LabeledGrouping {
        base: g.clone(),
        partition: p.clone(),
        bucket_graph,
        labels: coloring.into_colors(),
        label_count,
        bucket_of,
    })
}

/// Splits a connected graph of maximum degree at most five into buckets that
/// are connected in a spanning tree: every bucket but the last has size in
/// `[ceil(r/4), r]`, the last has size at most `r`.
///
/// The spanning tree is rooted at a vertex with at most four children, so
/// every tree vertex has at most four children. Subtrees are processed
/// bottom-up: a child's pending component smaller than `ceil(r/4)` always
/// joins its parent (at most `1 + 4(ceil(r/4) - 1) <= r` vertices), larger
/// ones join while they fit and are emitted as buckets otherwise.
pub fn spanning_tree_partition(g: &Graph, r: usize) -> Result<Partition, GraphError> {
    let n = g.n();
    if r < 4 {
        return Err(GraphError::InvalidParameter(format!(
            "bucket size r = {r} must be at least 4"
        )));
    }
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    if g.max_degree() > 5 {
        return Err(GraphError::DegreeTooLarge {
            found: g.max_degree(),
            limit: 5,
        });
    }
    if n <= r {
        return Partition::new(
            if n == 0 {
                vec![]
            } else {
                vec![(0..n).collect()]
            },
            r,
        );
    }
    let lower = r.div_ceil(4);

    // BFS tree from 0, then re-root at a tree leaf if 0 has five tree neighbors.
    let mut tree: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                tree[u].push(v);
                tree[v].push(u);
                queue.push_back(v);
            }
        }
    }
    let root = if tree[0].len() <= 4 {
        0
    } else {
        (0..n).find(|&v| tree[v].len() == 1).unwrap()
    };

    // iterative post-order
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut stack = vec![root];
    parent[root] = root;
    while let Some(u) = stack.pop() {
        order.push(u);
        for &v in &tree[u] {
            if parent[v] == usize::MAX {
                parent[v] = u;
                stack.push(v);
            }
        }
    }

    let mut pending: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut buckets = Vec::new();
    for &u in order.iter().rev() {
        let mut mine = vec![u];
        let mut large = Vec::new();
        for &c in &tree[u] {
            if c == parent[u] && u != root || c == root {
                continue;
            }
            let comp = std::mem::take(&mut pending[c]);
            if comp.len() < lower {
                mine.extend(comp);
            } else {
                large.push(comp);
            }
        }
        for comp in large {
            if mine.len() + comp.len() <= r {
                mine.extend(comp);
            } else {
                buckets.push(comp);
            }
        }
        pending[u] = mine;
    }
    buckets.push(std::mem::take(&mut pending[root]));
    Partition::new(buckets, r)
}
