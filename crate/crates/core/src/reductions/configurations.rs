//! 3-coloring to LIST-HOM with one target vertex per bucket configuration.
//!
//! Vertices are grouped into buckets of size `r`. A configuration of a
//! bucket records its label, the colors of its own vertices and, slot by
//! slot, every edge leaving the bucket: which member it starts at, the label
//! and position of the far endpoint, and that endpoint's color. The labels
//! come from a coloring of the square of the bucket graph, so a label names
//! at most one neighbor of any bucket. Two configurations are adjacent when
//! each agrees with the colors the other claims for its endpoints.

use std::collections::HashMap;

use super::{
    check_degree, check_r, pad_coloring, padding, three_coloring_from, Certificates, Problem,
    ReductionRecord, Stage,
};
use crate::coloring::{induced_colorings, VertexColoring};
use crate::error::ReductionError;
use crate::graph::Graph;
use crate::grouping::{build_grouping, LabeledGrouping, Partition};
use crate::solver::{Homomorphism, ListHomInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slot {
    /// Position of the inner endpoint in its bucket.
    pub from: u8,
    /// Label of the bucket holding the outer endpoint.
    pub label: u32,
    /// Position of the outer endpoint in its bucket.
    pub to: u8,
    /// Color of the outer endpoint, `1..=3`.
    pub color: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    pub label: u32,
    /// Colors of the bucket's vertices in bucket order.
    pub coloring: Vec<u8>,
    /// One slot per outgoing edge, then `None` up to `dmax * r` slots.
    pub slots: Vec<Option<Slot>>,
}

impl Configuration {
    fn used_slots(&self) -> impl Iterator<Item = &Slot> {
        self.slots.iter().map_while(Option::as_ref)
    }

    /// Whether `self` and `other` can sit on adjacent buckets.
    pub fn compatible(&self, other: &Configuration) -> bool {
        agrees(self, other) && agrees(other, self)
    }
}

/// Every slot of `a` that points at `b`'s label names the color `b` gives
/// that position.
fn agrees(a: &Configuration, b: &Configuration) -> bool {
    a.used_slots()
        .filter(|s| s.label == b.label)
        .all(|s| b.coloring.get(s.to as usize) == Some(&s.color))
}

#[derive(Debug, Clone)]
pub struct ConfigurationData {
    /// Grouping of the padded input.
    pub grouping: LabeledGrouping,
    pub original_n: usize,
    pub dmax: usize,
    /// Size of the label palette, `dmax^2 r^2 + 1`.
    pub label_palette: usize,
    pub configurations: Vec<Configuration>,
    index: HashMap<Configuration, usize>,
}

/// Buckets `{0..r-1}, {r..2r-1}, ...` after padding `g` with isolated
/// vertices up to a multiple of `r`.
pub fn reduce_3col_to_listhom(
    g: &Graph,
    r: usize,
    dmax: usize,
) -> Result<ReductionRecord, ReductionError> {
    check_dmax(dmax)?;
    check_r(g, r)?;
    check_degree(g, dmax)?;
    let padded = g.with_isolated(padding(g.n(), r));
    let partition = Partition::consecutive(padded.n(), r)?;
    build(g, padded, partition, dmax)
}

/// Same construction with the buckets given. The partition must cover
/// `0..g.n()`.
pub fn reduce_3col_to_listhom_partitioned(
    g: &Graph,
    partition: &Partition,
    dmax: usize,
) -> Result<ReductionRecord, ReductionError> {
    check_dmax(dmax)?;
    check_degree(g, dmax)?;
    build(g, g.clone(), partition.clone(), dmax)
}

fn check_dmax(dmax: usize) -> Result<(), ReductionError> {
    if dmax == 4 || dmax == 5 {
        Ok(())
    } else {
        Err(ReductionError::Precondition(format!(
            "dmax must be 4 or 5, got {dmax}"
        )))
    }
}

fn build(
    g: &Graph,
    padded: Graph,
    partition: Partition,
    dmax: usize,
) -> Result<ReductionRecord, ReductionError> {
    let r = partition.capacity();
    let grouping = build_grouping(&padded, &partition)?;
    let label_palette = dmax * dmax * r * r + 1;
    debug_assert!(grouping.label_count as usize <= label_palette);

    let mut data = ConfigurationData {
        grouping,
        original_n: g.n(),
        dmax,
        label_palette,
        configurations: Vec::new(),
        index: HashMap::new(),
    };
    let mut lists = Vec::with_capacity(partition.len());
    for b in 0..partition.len() {
        let closed = data.closed_neighborhood(b);
        let mut list = Vec::new();
        for colors in induced_colorings(&padded, &closed, 3) {
            let color_of = |v: usize| colors[closed.binary_search(&v).unwrap()];
            let c = data.configuration(b, color_of);
            list.push(data.intern(c));
        }
        list.sort_unstable();
        list.dedup();
        lists.push(list);
    }

    let cs = &data.configurations;
    let mut edges = Vec::new();
    for i in 0..cs.len() {
        for j in i + 1..cs.len() {
            if cs[i].compatible(&cs[j]) {
                edges.push((i, j));
            }
        }
    }
    let h = Graph::from_edges(cs.len(), edges)?;
    let out = ListHomInstance::new(data.grouping.bucket_graph.clone(), h, lists)?;
    Ok(ReductionRecord {
        input: Problem::ThreeColoring(g.clone()),
        out,
        stage: Stage::Configurations(data),
        certificates: Certificates::default(),
    })
}

impl ConfigurationData {
    fn base(&self) -> &Graph {
        &self.grouping.base
    }

    fn bucket(&self, b: usize) -> &[usize] {
        &self.grouping.partition.buckets()[b]
    }

    /// The bucket with every neighbor of its members, sorted.
    fn closed_neighborhood(&self, b: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.bucket(b).to_vec();
        for &u in self.bucket(b) {
            vs.extend_from_slice(self.base().neighbors(u));
        }
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Edges `(u, v)` with `u` in bucket `b` and `v` outside, lexicographic.
    pub fn outgoing_edges(&self, b: usize) -> Vec<(usize, usize)> {
        let owner = &self.grouping.bucket_of;
        let mut out: Vec<(usize, usize)> = self
            .bucket(b)
            .iter()
            .flat_map(|&u| self.base().neighbors(u).iter().map(move |&v| (u, v)))
            .filter(|&(_, v)| owner[v] != b)
            .collect();
        out.sort_unstable();
        out
    }

    /// The configuration of bucket `b` under a coloring of its closed
    /// neighborhood.
    fn configuration(&self, b: usize, color_of: impl Fn(usize) -> u8) -> Configuration {
        let gr = &self.grouping;
        let mut slots: Vec<Option<Slot>> = self
            .outgoing_edges(b)
            .into_iter()
            .map(|(u, v)| {
                Some(Slot {
                    from: gr.position(u) as u8,
                    label: gr.label(gr.bucket_of[v]),
                    to: gr.position(v) as u8,
                    color: color_of(v),
                })
            })
            .collect();
        slots.resize(self.dmax * self.grouping.partition.capacity(), None);
        Configuration {
            label: gr.label(b),
            coloring: self.bucket(b).iter().map(|&u| color_of(u)).collect(),
            slots,
        }
    }

    fn intern(&mut self, c: Configuration) -> usize {
        if let Some(&i) = self.index.get(&c) {
            return i;
        }
        let i = self.configurations.len();
        self.index.insert(c.clone(), i);
        self.configurations.push(c);
        i
    }

    pub fn index_of(&self, c: &Configuration) -> Option<usize> {
        self.index.get(c).copied()
    }

    pub(super) fn encode(&self, coloring: &VertexColoring) -> Result<Homomorphism, ReductionError> {
        let colors = pad_coloring(coloring, self.base().n() - self.original_n);
        (0..self.grouping.partition.len())
            .map(|b| {
                let c = self.configuration(b, |v| colors[v]);
                self.index_of(&c).ok_or_else(|| {
                    ReductionError::BadWitness(format!(
                        "bucket {} has no matching configuration",
                        b + 1
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Homomorphism)
    }

    pub(super) fn decode(&self, w: &Homomorphism) -> Result<VertexColoring, ReductionError> {
        let gr = &self.grouping;
        let colors = (0..self.base().n())
            .map(|v| self.configurations[w.image(gr.bucket_of[v])].coloring[gr.position(v)])
            .collect();
        three_coloring_from(colors, self.original_n)
    }
}
