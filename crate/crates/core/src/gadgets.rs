//! Rigid gadgets: the wheel `D`, chains `T_k` of wheels, chains of
//! clique-joined 5-cycles, and the matching `A_h`.
//!
//! Marks are stored by role name. Chains record their shared vertices under
//! `"z"` in order, and per-block vertex lists under `"clique<j>"`,
//! `"cycle<j>"` (cycle order, starting at the block's `x1`) and `"apex<j>"`
//! for blocks `j = 1..=k+1`.

use std::collections::BTreeMap;

use crate::coloring::{greedy_coloring, VertexColoring};
use crate::error::ReductionError;
use crate::graph::{Graph, GraphBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetKind {
    Wheel,
    Chain { k: usize },
    CliqueChain { k: usize, t: usize },
    Matching { h: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: Graph,
    pub marks: BTreeMap<String, Vec<usize>>,
    pub kind: GadgetKind,
}

impl GadgetGraph {
    pub fn mark(&self, role: &str) -> &[usize] {
        self.marks.get(role).map_or(&[], Vec::as_slice)
    }

    /// The shared vertices `z_1..z_k` of a chain, or the apex of `D`.
    pub fn z(&self) -> &[usize] {
        self.mark("z")
    }

    /// Number of blocks of a chain.
    pub fn blocks(&self) -> usize {
        match self.kind {
            GadgetKind::Chain { k } | GadgetKind::CliqueChain { k, .. } => k + 1,
            _ => 0,
        }
    }

    /// All vertices of block `j` (1-based).
    pub fn block(&self, j: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = ["clique", "apex", "cycle"]
            .iter()
            .flat_map(|role| self.mark(&format!("{role}{j}")).iter().copied())
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// The 5-cycle `x1..x5` with apex `z`; `z` is vertex 0.
pub fn build_d() -> GadgetGraph {
    let mut b = GraphBuilder::new(6);
    for i in 0..5 {
        b.edge(0, 1 + i);
        b.edge(1 + i, 1 + (i + 1) % 5);
    }
    let mut marks = BTreeMap::new();
    marks.insert("z".to_string(), vec![0]);
    marks.insert("x".to_string(), (1..=5).collect());
    GadgetGraph {
        graph: b.build(),
        marks,
        kind: GadgetKind::Wheel,
    }
}

fn add_cycle(b: &mut GraphBuilder) -> Vec<usize> {
    let c = b.add_vertices(5);
    for i in 0..5 {
        b.edge(c[i], c[(i + 1) % 5]);
    }
    c
}

/// `k + 1` copies of `D` in a row; the apex of copy `j + 1` is the `x1` of
/// copy `j` and is marked `z_j`. Has `5k + 6` vertices.
pub fn build_t(k: usize) -> Result<GadgetGraph, ReductionError> {
    if k == 0 {
        return Err(ReductionError::Precondition(
            "chain length k must be at least 1".into(),
        ));
    }
    let mut b = GraphBuilder::new(0);
    let mut marks = BTreeMap::new();
    let mut apex = b.add_vertex();
    let mut zs = Vec::with_capacity(k);
    for j in 1..=k + 1 {
        let c = add_cycle(&mut b);
        for &x in &c {
            b.edge(apex, x);
        }
        marks.insert(format!("apex{j}"), vec![apex]);
        marks.insert(format!("cycle{j}"), c.clone());
        if j <= k {
            zs.push(c[0]);
            apex = c[0];
        }
    }
    marks.insert("z".to_string(), zs);
    Ok(GadgetGraph {
        graph: b.build(),
        marks,
        kind: GadgetKind::Chain { k },
    })
}

/// `k + 1` blocks, each a clique `Q_j` of size `t + 3` fully joined to a
/// 5-cycle `C_j`. The `x1` of `C_j` is `z_j` and is also a member of
/// `Q_{j+1}`; `Q_1` is all fresh. Has `(t + 8) + k(t + 7)` vertices.
pub fn build_t_clique(k: usize, t: usize) -> Result<GadgetGraph, ReductionError> {
    if k == 0 || t == 0 {
        return Err(ReductionError::Precondition(format!(
            "clique chain needs k >= 1 and t >= 1, got k = {k}, t = {t}"
        )));
    }
    let mut b = GraphBuilder::new(0);
    let mut marks = BTreeMap::new();
    let mut zs = Vec::with_capacity(k);
    let mut carried: Option<usize> = None;
    for j in 1..=k + 1 {
        let mut q: Vec<usize> = carried.into_iter().collect();
        q.extend(b.add_vertices(t + 3 - q.len()));
        b.clique(&q);
        let c = add_cycle(&mut b);
        for &u in &q {
            for &x in &c {
                b.edge(u, x);
            }
        }
        marks.insert(format!("clique{j}"), q);
        marks.insert(format!("cycle{j}"), c.clone());
        if j <= k {
            zs.push(c[0]);
            carried = Some(c[0]);
        }
    }
    marks.insert("z".to_string(), zs);
    let graph = b.build();
    debug_assert_eq!(graph.n(), (t + 8) + k * (t + 7));
    Ok(GadgetGraph {
        graph,
        marks,
        kind: GadgetKind::CliqueChain { k, t },
    })
}

/// The matching `a_i - b_i`, `i = 1..=h`; `a_i = 2(i-1)`, `b_i = 2(i-1)+1`.
pub fn build_a(h: usize) -> Result<GadgetGraph, ReductionError> {
    if h == 0 {
        return Err(ReductionError::Precondition(
            "matching size h must be at least 1".into(),
        ));
    }
    let graph =
        Graph::from_edges(2 * h, (0..h).map(|i| (2 * i, 2 * i + 1))).expect("matching is simple");
    let mut marks = BTreeMap::new();
    marks.insert("a".to_string(), (0..h).map(|i| 2 * i).collect());
    marks.insert("b".to_string(), (0..h).map(|i| 2 * i + 1).collect());
    Ok(GadgetGraph {
        graph,
        marks,
        kind: GadgetKind::Matching { h },
    })
}

/// Proper coloring of a clique chain built with parameter `t`, using at most
/// `t + 8` colors (palette size `t + 8`). Vertices are colored greedily in
/// block order, so a cycle vertex sees at most the `t + 3` clique colors and
/// two cycle neighbors.
pub fn chain_coloring(gadget: &GadgetGraph, t: usize) -> Result<VertexColoring, ReductionError> {
    let GadgetKind::CliqueChain { k, t: built } = gadget.kind else {
        return Err(ReductionError::Gadget(format!(
            "expected a clique chain, got {:?}",
            gadget.kind
        )));
    };
    if built != t {
        return Err(ReductionError::Gadget(format!(
            "chain was built for t = {built}, not t = {t}"
        )));
    }
    if gadget.graph.n() != (t + 8) + k * (t + 7) {
        return Err(ReductionError::Gadget(
            "vertex count does not match the chain shape".into(),
        ));
    }
    let greedy = greedy_coloring(&gadget.graph);
    let palette = (t + 8) as u32;
    if greedy.k() > palette || !greedy.is_proper(&gadget.graph) {
        return Err(ReductionError::Gadget(
            "block sweep exceeded t + 8 colors".into(),
        ));
    }
    Ok(VertexColoring::new(greedy.into_colors(), palette)?)
}
