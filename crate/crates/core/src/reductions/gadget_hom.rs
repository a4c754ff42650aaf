//! LIST-HOM to HOM by attaching rigid gadgets to both sides.
//!
//! Source and target both receive the clique chain `T_{h,t+3}` and the
//! matching `A_h`, laid out first so that the identity on them is the natural
//! choice. Chain vertex `z_i` is joined to `a_i` and `b_i`. A source vertex is
//! joined to every `a_j`, and to `b_j` exactly when `j` is not in its list;
//! target vertex `j` is joined to all of `A_h` except `b_j`. The gadgets can
//! only map onto themselves, which turns the `b_j` edges into list
//! constraints.

use super::{Certificates, Problem, ReductionRecord, Stage};
use crate::coloring::{greedy_coloring, k_coloring, VertexColoring};
use crate::error::ReductionError;
use crate::gadgets::{build_a, build_t_clique, chain_coloring, GadgetGraph};
use crate::graph::GraphBuilder;
use crate::solver::{Homomorphism, ListHomInstance};

/// Targets with fewer vertices are padded with isolated vertices that no
/// list names. With `h` pairs, a chain vertex within distance two of every
/// `z_i` exists for `h <= 5`, and a source vertex mapped there drags all of
/// `A_h` into the chain. From six pairs on `z_1` and `z_h` are too far apart.
pub const MIN_MATCHING: usize = 6;

#[derive(Debug, Clone)]
pub struct GadgetData {
    /// Target size the gadgets were built for, at least [`MIN_MATCHING`].
    pub h: usize,
    pub input_h: usize,
    pub t: usize,
    pub chain: GadgetGraph,
    /// First vertex of `A_h`; `a_i` is `matching + 2(i-1)`, `b_i` the next.
    pub matching: usize,
    /// First vertex of the copy of the source (in `out.g`) and of the target
    /// (in `out.h`).
    pub copy: usize,
}

impl GadgetData {
    pub fn a(&self, i: usize) -> usize {
        self.matching + 2 * i
    }

    pub fn b(&self, i: usize) -> usize {
        self.matching + 2 * i + 1
    }

    /// `(h + 1)(t + 11)`, the bound on the target size.
    pub fn size_bound(&self) -> usize {
        (self.h + 1) * (self.t + 11)
    }

    /// A cover of the output source: the gadgets plus the copied `cover`.
    pub fn lift_cover(&self, cover: &[usize]) -> Vec<usize> {
        (0..self.copy)
            .chain(cover.iter().map(|&v| self.copy + v))
            .collect()
    }

    pub(super) fn encode(&self, m: &Homomorphism) -> Homomorphism {
        Homomorphism(
            (0..self.copy)
                .chain(m.targets().iter().map(|&u| self.copy + u))
                .collect(),
        )
    }

    pub(super) fn decode(&self, w: &Homomorphism) -> Result<Homomorphism, ReductionError> {
        w.targets()[self.copy..]
            .iter()
            .enumerate()
            .map(|(v, &x)| match x.checked_sub(self.copy) {
                Some(u) if u < self.input_h => Ok(u),
                _ => Err(ReductionError::BadWitness(format!(
                    "source vertex {} is not mapped into the target copy",
                    v + 1
                ))),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Homomorphism)
    }
}

/// `t` bounds the chromatic number of `inst.h`. Without `h_coloring` a greedy
/// coloring is used (and fixes `t` when `t` is not given either); a given
/// coloring must be proper and use colors `1..=t`.
pub fn reduce_listhom_to_hom(
    inst: &ListHomInstance,
    t: Option<usize>,
    h_coloring: Option<&VertexColoring>,
) -> Result<ReductionRecord, ReductionError> {
    // an empty target is fine: every pair is then padding
    let input_h = inst.h.n();
    let coloring = match h_coloring {
        Some(c) => {
            if c.len() != input_h {
                return Err(ReductionError::Precondition(format!(
                    "coloring covers {} vertices, the target has {input_h}",
                    c.len()
                )));
            }
            if let Some((u, v)) = c.conflict(&inst.h) {
                return Err(ReductionError::Precondition(format!(
                    "t is below the chromatic number witnessed by edge {{{}, {}}} in one color class",
                    u + 1,
                    v + 1
                )));
            }
            c.clone()
        }
        None => {
            let greedy = greedy_coloring(&inst.h);
            match t {
                Some(t) if greedy.k() as usize > t => {
                    k_coloring(&inst.h, t as u32).ok_or_else(|| {
                        ReductionError::Precondition(format!("target has no proper {t}-coloring"))
                    })?
                }
                _ => greedy,
            }
        }
    };
    let used = coloring.colors().iter().copied().max().unwrap_or(1) as usize;
    let t = t.unwrap_or(used.max(1));
    if used > t || t == 0 {
        return Err(ReductionError::Precondition(format!(
            "coloring uses {used} colors, more than t = {t}"
        )));
    }

    let h = input_h.max(MIN_MATCHING);
    let chain = build_t_clique(h, t)?;
    let matching_gadget = build_a(h)?;
    let matching = chain.graph.n();
    let copy = matching + matching_gadget.graph.n();
    let zs = chain.z().to_vec();

    let gadget_part = |b: &mut GraphBuilder| {
        b.embed(&chain.graph, 0);
        b.embed(&matching_gadget.graph, matching);
        for (i, &z) in zs.iter().enumerate() {
            b.edge(z, matching + 2 * i);
            b.edge(z, matching + 2 * i + 1);
        }
    };

    let n = inst.g.n();
    let mut gb = GraphBuilder::new(copy + n);
    gadget_part(&mut gb);
    for (u, v) in inst.g.edges() {
        gb.edge(copy + u, copy + v);
    }
    for v in 0..n {
        for j in 0..h {
            gb.edge(copy + v, matching + 2 * j);
            if j >= input_h || !inst.allowed(v, j) {
                gb.edge(copy + v, matching + 2 * j + 1);
            }
        }
    }

    let mut hb = GraphBuilder::new(copy + h);
    gadget_part(&mut hb);
    for (u, v) in inst.h.edges() {
        hb.edge(copy + u, copy + v);
    }
    for i in 0..h {
        for j in 0..h {
            hb.edge(copy + i, matching + 2 * j);
            if i != j {
                hb.edge(copy + i, matching + 2 * j + 1);
            }
        }
    }
    let out = ListHomInstance::full(gb.build(), hb.build());

    let data = GadgetData {
        h,
        input_h,
        t,
        chain,
        matching,
        copy,
    };
    let chain_colors = chain_coloring(&data.chain, t)?;
    let mut colors = chain_colors.into_colors();
    for _ in 0..h {
        colors.push(t as u32 + 9);
        colors.push(t as u32 + 10);
    }
    colors.extend_from_slice(coloring.colors());
    colors.resize(copy + h, 1);
    let certificates = Certificates {
        h_coloring: Some(VertexColoring::new(colors, t as u32 + 10)?),
        cover: None,
    };
    debug_assert!(out.h.n() <= data.size_bound());
    Ok(ReductionRecord {
        input: Problem::ListHom(inst.clone()),
        out,
        stage: Stage::Gadgets(data),
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::reductions::Witness;
    use crate::solver::{solve_backtrack, verify, Mode};

    fn solve(rec: &ReductionRecord) -> Option<Homomorphism> {
        solve_backtrack(&rec.out, Mode::Plain).0
    }

    #[test]
    fn single_vertex() {
        let inst = ListHomInstance::new(Graph::empty(1), Graph::empty(1), vec![vec![0]]).unwrap();
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        let w = solve(&rec).unwrap();
        assert_eq!(rec.decode(&w).unwrap(), Witness::Map(Homomorphism(vec![0])));
        let cert = rec.certificates.h_coloring.as_ref().unwrap();
        assert!(cert.is_proper(&rec.out.h));
        assert!(cert.k() <= 11);
    }

    #[test]
    fn source_vertex_cannot_leave_the_copy() {
        // a full-list vertex next to a chain vertex close to every z_i
        let inst = ListHomInstance::full(Graph::empty(1), Graph::empty(MIN_MATCHING));
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        let Stage::Gadgets(d) = &rec.stage else {
            panic!()
        };
        let lists: Vec<Vec<usize>> = (0..rec.out.g.n())
            .map(|v| {
                let outside = (0..rec.out.h.n()).filter(|&u| u < d.copy);
                if v == d.copy {
                    outside.collect()
                } else {
                    (0..rec.out.h.n()).collect()
                }
            })
            .collect();
        let escape = ListHomInstance::new(rec.out.g.clone(), rec.out.h.clone(), lists).unwrap();
        assert!(solve_backtrack(&escape, Mode::Plain).0.is_none());
    }

    #[test]
    fn empty_target() {
        let inst =
            ListHomInstance::new(Graph::empty(2), Graph::empty(0), vec![vec![], vec![]]).unwrap();
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        assert!(solve(&rec).is_none());
    }

    #[test]
    fn empty_list_on_single_vertex_target() {
        let inst = ListHomInstance::new(Graph::empty(1), Graph::empty(1), vec![vec![]]).unwrap();
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        assert!(solve(&rec).is_none());
    }

    #[test]
    fn forced_crossing_map() {
        let inst = ListHomInstance::new(
            Graph::complete(2),
            Graph::complete(2),
            vec![vec![1], vec![0]],
        )
        .unwrap();
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        let Stage::Gadgets(d) = &rec.stage else {
            panic!()
        };
        assert_eq!((d.t, d.h), (2, MIN_MATCHING));
        assert!(rec.out.h.n() <= d.size_bound());
        let w = solve(&rec).unwrap();
        assert_eq!(
            rec.decode(&w).unwrap(),
            Witness::Map(Homomorphism(vec![1, 0]))
        );
        let fwd = rec.encode(&Witness::Map(Homomorphism(vec![1, 0]))).unwrap();
        assert!(verify(&rec.out, &fwd, Mode::Plain).unwrap());
    }

    #[test]
    fn same_forced_vertex_is_unsatisfiable() {
        let inst = ListHomInstance::new(
            Graph::complete(2),
            Graph::complete(2),
            vec![vec![0], vec![0]],
        )
        .unwrap();
        let rec = reduce_listhom_to_hom(&inst, None, None).unwrap();
        assert!(solve(&rec).is_none());
    }

    #[test]
    fn rejects_improper_coloring() {
        let inst = ListHomInstance::full(Graph::complete(2), Graph::complete(2));
        let c = VertexColoring::new(vec![1, 1], 1).unwrap();
        assert!(reduce_listhom_to_hom(&inst, Some(1), Some(&c)).is_err());
    }
}
