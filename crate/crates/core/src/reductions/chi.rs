//! LIST-HOM to LIST-HOM whose target has chromatic number at most `k`.
//!
//! Given a proper `k`-coloring of the source, every target vertex `u` is
//! split into `(u, 1) .. (u, k)`, stored at index `u * k + (i - 1)`. Copies
//! with different color indices inherit the edges of `h`; a source vertex of
//! color `i` may only use copies `(u, i)`.

use super::{Certificates, Problem, ReductionRecord, Stage};
use crate::coloring::VertexColoring;
use crate::error::{GraphError, ReductionError};
use crate::graph::Graph;
use crate::solver::{Homomorphism, ListHomInstance};

#[derive(Debug, Clone)]
pub struct ColorSplitData {
    pub k: usize,
    pub coloring: VertexColoring,
}

pub fn reduce_bound_chi(
    inst: &ListHomInstance,
    coloring: &VertexColoring,
) -> Result<ReductionRecord, ReductionError> {
    if coloring.len() != inst.g.n() {
        return Err(ReductionError::Precondition(format!(
            "coloring covers {} vertices, the source has {}",
            coloring.len(),
            inst.g.n()
        )));
    }
    if let Some((u, v)) = coloring.conflict(&inst.g) {
        return Err(ReductionError::Precondition(format!(
            "coloring is not proper: edge {{{}, {}}} is monochromatic",
            u + 1,
            v + 1
        )));
    }
    let k = coloring.k() as usize;
    let h = &inst.h;
    let mut edges = Vec::new();
    for (u, v) in h.edges() {
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    let (a, b) = (u * k + i, v * k + j);
                    edges.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    let split = Graph::from_edges(h.n() * k, edges)?;
    let lists = (0..inst.g.n())
        .map(|w| {
            let i = coloring.color(w) as usize - 1;
            inst.list(w).iter().map(|u| u * k + i).collect()
        })
        .collect();
    let out = ListHomInstance::new(inst.g.clone(), split, lists)?;
    let index_colors = (0..h.n() * k).map(|x| (x % k) as u32 + 1).collect();
    let certificates = Certificates {
        h_coloring: Some(VertexColoring::new(index_colors, k as u32).map_err(GraphError::from)?),
        cover: None,
    };
    Ok(ReductionRecord {
        input: Problem::ListHom(inst.clone()),
        out,
        stage: Stage::ColorSplit(ColorSplitData {
            k,
            coloring: coloring.clone(),
        }),
        certificates,
    })
}

impl ColorSplitData {
    pub(super) fn encode(&self, m: &Homomorphism) -> Homomorphism {
        Homomorphism(
            m.targets()
                .iter()
                .enumerate()
                .map(|(w, &u)| u * self.k + self.coloring.color(w) as usize - 1)
                .collect(),
        )
    }

    pub(super) fn decode(&self, m: &Homomorphism) -> Homomorphism {
        Homomorphism(m.targets().iter().map(|&x| x / self.k).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::greedy_coloring;
    use crate::reductions::Witness;
    use crate::solver::{solve_backtrack, Mode};

    #[test]
    fn k2_into_k2() {
        let inst = ListHomInstance::full(Graph::complete(2), Graph::complete(2));
        let c = VertexColoring::new(vec![1, 2], 2).unwrap();
        let rec = reduce_bound_chi(&inst, &c).unwrap();
        assert_eq!(rec.out.h.n(), 4);
        assert!(rec
            .certificates
            .h_coloring
            .as_ref()
            .unwrap()
            .is_proper(&rec.out.h));
        let w = solve_backtrack(&rec.out, Mode::Plain).0.unwrap();
        let Witness::Map(m) = rec.decode(&w).unwrap() else {
            panic!()
        };
        assert_eq!(rec.encode(&Witness::Map(m)).unwrap(), w);
    }

    #[test]
    fn triangle_into_edge_stays_unsatisfiable() {
        let inst = ListHomInstance::full(Graph::complete(3), Graph::complete(2));
        let rec = reduce_bound_chi(&inst, &greedy_coloring(&inst.g)).unwrap();
        assert_eq!(rec.out.h.n(), 6);
        assert!(solve_backtrack(&rec.out, Mode::Plain).0.is_none());
    }

    #[test]
    fn rejects_improper_coloring() {
        let inst = ListHomInstance::full(Graph::complete(2), Graph::complete(2));
        let c = VertexColoring::new(vec![1, 1], 2).unwrap();
        assert!(reduce_bound_chi(&inst, &c).is_err());
    }
}
