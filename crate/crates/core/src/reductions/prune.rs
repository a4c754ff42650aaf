//! Shrinks a LIST-HOM instance without changing its solutions.
//!
//! Lists are made singleton arc consistent, target edges that no source edge
//! can use are dropped, and target vertices that remain in no list are
//! deleted. An edge `{a, b}` survives for source edge `{x, y}` only if `b` is
//! left for `y` once `x = a` is propagated. Every list homomorphism of the
//! input only ever uses surviving values and edges, so the witness sets of
//! input and output are in bijection.

use super::{Certificates, Problem, ReductionRecord, Stage};
use crate::bitset::BitSet;
use crate::coloring::VertexColoring;
use crate::error::ReductionError;
use crate::graph::Graph;
use crate::solver::{singleton_consistent_domains, Homomorphism, ListHomInstance, Mode};

#[derive(Debug, Clone)]
pub struct PruneData {
    /// Input index of every output target vertex.
    pub kept: Vec<usize>,
    /// Output index of every input target vertex, if it survived.
    pub new_index: Vec<Option<usize>>,
}

/// A coloring of the input target, if given, is restricted to the survivors.
pub fn prune_listhom(
    inst: &ListHomInstance,
    h_coloring: Option<&VertexColoring>,
) -> Result<ReductionRecord, ReductionError> {
    let hn = inst.h.n();
    let mut used = Vec::new();
    let mut row = BitSet::new(hn);
    let doms = singleton_consistent_domains(inst, Mode::Plain, |x, a, dom| {
        for &y in inst.g.neighbors(x) {
            row.copy_from(inst.h.neighbor_row(a));
            row.intersect_with(&dom[y]);
            used.extend(row.iter().map(|b| (a, b)));
        }
    });
    let wiped = doms.iter().any(BitSet::is_empty);

    let mut alive = BitSet::new(hn);
    if !wiped {
        doms.iter().for_each(|d| alive.union_with(d));
    }
    if alive.is_empty() && hn > 0 {
        // no witness at all: keep one vertex and empty every list
        alive.insert(0);
    }
    let kept: Vec<usize> = alive.iter().collect();
    let mut new_index = vec![None; hn];
    for (i, &u) in kept.iter().enumerate() {
        new_index[u] = Some(i);
    }

    let mut edges = Vec::new();
    if !wiped {
        for (a, b) in used {
            let (p, q) = (new_index[a].unwrap(), new_index[b].unwrap());
            edges.push((p.min(q), p.max(q)));
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let h = Graph::from_edges(kept.len(), edges)?;
    let lists = doms
        .iter()
        .map(|d| {
            if wiped {
                Vec::new()
            } else {
                d.iter().map(|u| new_index[u].unwrap()).collect()
            }
        })
        .collect();
    let out = ListHomInstance::new(inst.g.clone(), h, lists)?;
    let h_coloring = match h_coloring {
        Some(c) => Some(VertexColoring::new(
            kept.iter().map(|&u| c.color(u)).collect(),
            c.k(),
        )?),
        None => None,
    };
    Ok(ReductionRecord {
        input: Problem::ListHom(inst.clone()),
        out,
        stage: Stage::Prune(PruneData { kept, new_index }),
        certificates: Certificates {
            h_coloring,
            cover: None,
        },
    })
}

impl PruneData {
    pub(super) fn encode(&self, m: &Homomorphism) -> Result<Homomorphism, ReductionError> {
        m.targets()
            .iter()
            .map(|&u| {
                self.new_index[u].ok_or_else(|| {
                    ReductionError::BadWitness(format!("target {} was pruned", u + 1))
                })
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Homomorphism)
    }

    pub(super) fn decode(&self, m: &Homomorphism) -> Homomorphism {
        Homomorphism(m.targets().iter().map(|&u| self.kept[u]).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{enumerate_all, solve_backtrack};

    #[test]
    fn drops_unused_vertices_and_edges() {
        // path 0-1 into K4 with lists {0}, {1, 2}: vertex 3 and edge 1-2 go
        let inst = ListHomInstance::new(
            Graph::path(2),
            Graph::complete(4),
            vec![vec![0], vec![1, 2]],
        )
        .unwrap();
        let rec = prune_listhom(&inst, None).unwrap();
        assert_eq!(rec.out.h.n(), 3);
        assert_eq!(rec.out.h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2)]);
    }

    #[test]
    fn witness_sets_correspond() {
        for seed in 0..40u64 {
            let g = crate::graph::random_graph_max_degree(5, 3, seed);
            let h = crate::graph::random_graph_max_degree(5, 3, seed + 500);
            let inst = ListHomInstance::full(g, h);
            let rec = prune_listhom(&inst, None).unwrap();
            let before = enumerate_all(&inst, Mode::Plain, usize::MAX).witnesses;
            let after = enumerate_all(&rec.out, Mode::Plain, usize::MAX).witnesses;
            assert_eq!(before.len(), after.len(), "seed {seed}");
            let Stage::Prune(d) = &rec.stage else {
                panic!()
            };
            for w in &after {
                assert!(before.contains(&d.decode(w)));
            }
            assert_eq!(
                solve_backtrack(&rec.out, Mode::Plain).0.is_some(),
                !before.is_empty()
            );
        }
    }

    #[test]
    fn wipeout_gives_empty_lists() {
        let inst = ListHomInstance::new(
            Graph::path(3),
            Graph::complete(2),
            vec![vec![0], vec![1], vec![1]],
        )
        .unwrap();
        let rec = prune_listhom(&inst, None).unwrap();
        assert_eq!(rec.out.h.n(), 1);
        assert!(rec.out.lists().iter().all(BitSet::is_empty));
    }
}
