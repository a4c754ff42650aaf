//! 3-coloring to LIST-HOM where the source graph has a small vertex cover.
//!
//! Buckets are labeled by a proper coloring of the bucket graph itself. Each
//! edge between two buckets is subdivided by an auxiliary vertex, so the
//! buckets cover every edge. A bucket maps to a pair (label, internal
//! coloring); an auxiliary vertex maps to a compatible pair of those and is
//! adjacent to exactly its two halves.

use std::collections::HashMap;

use super::{
    check_degree, check_r, pad_coloring, padding, three_coloring_from, Certificates, Problem,
    ReductionRecord, Stage,
};
use crate::coloring::{greedy_coloring, induced_colorings, VertexColoring};
use crate::error::ReductionError;
use crate::graph::{Graph, GraphBuilder};
use crate::grouping::{bucket_graph, Partition};
use crate::solver::{Homomorphism, ListHomInstance};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PairVertex {
    /// `(label, coloring)` of one bucket.
    Single(u32, Vec<u8>),
    /// Two singles with different labels, in the order of the edge they sit on.
    Double(u32, Vec<u8>, u32, Vec<u8>),
}

#[derive(Debug, Clone)]
pub struct PairData {
    pub base: Graph,
    pub original_n: usize,
    pub partition: Partition,
    pub bucket_of: Vec<usize>,
    pub bucket_graph: Graph,
    /// Proper coloring of the bucket graph, `1..=label_count`.
    pub labels: Vec<u32>,
    /// `5r`, the label budget for maximum degree four.
    pub label_palette: usize,
    /// Bucket-graph edges in lexicographic order; auxiliary vertex `i` of the
    /// output sits on edge `i` and has index `buckets + i`.
    pub bucket_edges: Vec<(usize, usize)>,
    pub vertices: Vec<PairVertex>,
    index: HashMap<PairVertex, usize>,
}

pub fn reduce_3col_to_listhom_vc(g: &Graph, r: usize) -> Result<ReductionRecord, ReductionError> {
    check_r(g, r)?;
    check_degree(g, 4)?;
    let base = g.with_isolated(padding(g.n(), r));
    let partition = Partition::consecutive(base.n(), r)?;
    let (bucket_graph, bucket_of) = bucket_graph(&base, &partition)?;
    let labels = greedy_coloring(&bucket_graph).into_colors();
    let bucket_edges: Vec<(usize, usize)> = bucket_graph.edges().collect();
    let mut data = PairData {
        base,
        original_n: g.n(),
        partition,
        bucket_of,
        bucket_graph,
        labels,
        label_palette: 5 * r,
        bucket_edges,
        vertices: Vec::new(),
        index: HashMap::new(),
    };
    debug_assert!(data
        .labels
        .iter()
        .all(|&l| l as usize <= data.label_palette));

    let nb = data.partition.len();
    let inner: Vec<Vec<Vec<u8>>> = (0..nb)
        .map(|b| induced_colorings(&data.base, &data.partition.buckets()[b], 3))
        .collect();
    let mut lists: Vec<Vec<usize>> = Vec::new();
    for (b, colorings) in inner.iter().enumerate() {
        let l = data.labels[b];
        let list = colorings
            .iter()
            .map(|c| data.intern(PairVertex::Single(l, c.clone())))
            .collect();
        lists.push(list);
    }
    let mut edges = Vec::new();
    for i in 0..data.bucket_edges.len() {
        let (b1, b2) = data.bucket_edges[i];
        let (l1, l2) = (data.labels[b1], data.labels[b2]);
        let mut list = Vec::new();
        for c1 in &inner[b1] {
            for c2 in &inner[b2] {
                if !data.crossing_proper(b1, c1, b2, c2) {
                    continue;
                }
                let d = data.intern(PairVertex::Double(l1, c1.clone(), l2, c2.clone()));
                let s1 = data.index[&PairVertex::Single(l1, c1.clone())];
                let s2 = data.index[&PairVertex::Single(l2, c2.clone())];
                edges.push((s1.min(d), s1.max(d)));
                edges.push((s2.min(d), s2.max(d)));
                list.push(d);
            }
        }
        lists.push(list);
    }
    edges.sort_unstable();
    edges.dedup();
    let h = Graph::from_edges(data.vertices.len(), edges)?;

    let mut gb = GraphBuilder::new(nb + data.bucket_edges.len());
    for (i, &(b1, b2)) in data.bucket_edges.iter().enumerate() {
        gb.edge(b1, nb + i);
        gb.edge(b2, nb + i);
    }
    let out = ListHomInstance::new(gb.build(), h, lists)?;
    let sides = data
        .vertices
        .iter()
        .map(|v| {
            if matches!(v, PairVertex::Single(..)) {
                1
            } else {
                2
            }
        })
        .collect();
    let certificates = Certificates {
        h_coloring: Some(VertexColoring::new(sides, 2)?),
        cover: Some((0..nb).collect()),
    };
    Ok(ReductionRecord {
        input: Problem::ThreeColoring(g.clone()),
        out,
        stage: Stage::BucketPairs(data),
        certificates,
    })
}

impl PairData {
    fn intern(&mut self, v: PairVertex) -> usize {
        if let Some(&i) = self.index.get(&v) {
            return i;
        }
        let i = self.vertices.len();
        self.index.insert(v.clone(), i);
        self.vertices.push(v);
        i
    }

    pub fn index_of(&self, v: &PairVertex) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Whether colorings of two buckets agree on every edge between them.
    fn crossing_proper(&self, b1: usize, c1: &[u8], b2: usize, c2: &[u8]) -> bool {
        let (p1, p2) = (&self.partition.buckets()[b1], &self.partition.buckets()[b2]);
        p1.iter().enumerate().all(|(i, &u)| {
            p2.iter()
                .enumerate()
                .all(|(j, &v)| !self.base.has_edge(u, v) || c1[i] != c2[j])
        })
    }

    fn bucket_colors(&self, colors: &[u8], b: usize) -> Vec<u8> {
        self.partition.buckets()[b]
            .iter()
            .map(|&v| colors[v])
            .collect()
    }

    pub(super) fn encode(&self, coloring: &VertexColoring) -> Result<Homomorphism, ReductionError> {
        let colors = pad_coloring(coloring, self.base.n() - self.original_n);
        let nb = self.partition.len();
        let mut img = Vec::with_capacity(nb + self.bucket_edges.len());
        for b in 0..nb {
            img.push(PairVertex::Single(
                self.labels[b],
                self.bucket_colors(&colors, b),
            ));
        }
        for &(b1, b2) in &self.bucket_edges {
            img.push(PairVertex::Double(
                self.labels[b1],
                self.bucket_colors(&colors, b1),
                self.labels[b2],
                self.bucket_colors(&colors, b2),
            ));
        }
        img.iter()
            .map(|v| {
                self.index_of(v).ok_or_else(|| {
                    ReductionError::BadWitness("coloring has no matching target vertex".into())
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Homomorphism)
    }

    pub(super) fn decode(&self, w: &Homomorphism) -> Result<VertexColoring, ReductionError> {
        let mut colors = vec![0u8; self.base.n()];
        for (b, bucket) in self.partition.buckets().iter().enumerate() {
            let PairVertex::Single(_, c) = &self.vertices[w.image(b)] else {
                return Err(ReductionError::BadWitness(format!(
                    "bucket {} maps to a pair vertex",
                    b + 1
                )));
            };
            for (i, &v) in bucket.iter().enumerate() {
                colors[v] = c[i];
            }
        }
        three_coloring_from(colors, self.original_n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::is_vertex_cover;
    use crate::graph::bipartition;
    use crate::reductions::Witness;
    use crate::solver::{solve_backtrack, Mode};

    #[test]
    fn path_has_one_auxiliary_vertex() {
        let g = Graph::path(4);
        let rec = reduce_3col_to_listhom_vc(&g, 2).unwrap();
        assert_eq!(rec.out.g.n(), 3);
        assert!(bipartition(&rec.out.g).is_some());
        let cover = rec.certificates.cover.clone().unwrap();
        assert_eq!(cover, vec![0, 1]);
        assert!(is_vertex_cover(&rec.out.g, &cover));
        let w = solve_backtrack(&rec.out, Mode::Plain).0.unwrap();
        let Witness::Coloring(c) = rec.decode(&w).unwrap() else {
            panic!()
        };
        assert!(c.is_proper(&g));
        assert!(rec.encode(&Witness::Coloring(c)).is_ok());
    }

    #[test]
    fn k4_is_unsatisfiable() {
        let rec = reduce_3col_to_listhom_vc(&Graph::complete(4), 2).unwrap();
        assert!(solve_backtrack(&rec.out, Mode::Plain).0.is_none());
        let sides = rec.certificates.h_coloring.as_ref().unwrap();
        assert!(sides.is_proper(&rec.out.h));
    }

    #[test]
    fn double_vertices_have_degree_two() {
        let rec = reduce_3col_to_listhom_vc(&Graph::cycle(6), 2).unwrap();
        let Stage::BucketPairs(d) = &rec.stage else {
            panic!()
        };
        for (i, v) in d.vertices.iter().enumerate() {
            if let PairVertex::Double(l1, _, l2, _) = v {
                assert_ne!(l1, l2);
                assert_eq!(rec.out.h.degree(i), 2);
            }
        }
    }
}
