//! Exact solvers for (list) homomorphism and locally injective homomorphism.

mod bipartite;
mod brute;
mod cliques;
mod search;
mod vc;

pub use bipartite::{bipartite_fast_path, FastPath};
pub use brute::{solve_brute, solve_brute_with_budget, DEFAULT_BUDGET};
pub use search::{
    arc_consistent_domains, count_all, enumerate_all, for_each_solution,
    for_each_solution_by_twins, singleton_consistent_domains, solve_backtrack,
    solve_backtrack_with, Enumeration, SearchLimits, SearchOutcome, VarOrder,
};
pub use vc::solve_vc;

use crate::bitset::BitSet;
use crate::error::SolveError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Mode {
    #[default]
    Plain,
    /// No two vertices with a common neighbor share an image.
    LocallyInjective,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SolveStats {
    pub nodes_explored: u64,
    /// Cover assignments enumerated; only the vertex-cover strategy sets it.
    pub assignments_tried: u64,
}

/// A LIST-HOM instance. Lists are stored as bit sets over `V(h)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListHomInstance {
    pub g: Graph,
    pub h: Graph,
    lists: Vec<BitSet>,
}

impl ListHomInstance {
    /// Plain HOM: every list is `V(h)`.
    pub fn full(g: Graph, h: Graph) -> Self {
        let lists = vec![BitSet::full(h.n()); g.n()];
        ListHomInstance { g, h, lists }
    }

    pub fn new(g: Graph, h: Graph, lists: Vec<Vec<usize>>) -> Result<Self, SolveError> {
        if lists.len() != g.n() {
            return Err(SolveError::ListCountMismatch {
                found: lists.len(),
                expected: g.n(),
            });
        }
        let mut sets = Vec::with_capacity(lists.len());
        for (vertex, list) in lists.into_iter().enumerate() {
            if let Some(&target) = list.iter().find(|&&u| u >= h.n()) {
                return Err(SolveError::ListOutOfRange {
                    vertex,
                    target,
                    h: h.n(),
                });
            }
            sets.push(BitSet::from_iter(h.n(), list));
        }
        Ok(ListHomInstance { g, h, lists: sets })
    }

    pub fn from_sets(g: Graph, h: Graph, lists: Vec<BitSet>) -> Result<Self, SolveError> {
        if lists.len() != g.n() {
            return Err(SolveError::ListCountMismatch {
                found: lists.len(),
                expected: g.n(),
            });
        }
        for (vertex, l) in lists.iter().enumerate() {
            if l.capacity() != h.n() {
                let target = l.last().unwrap_or(h.n());
                return Err(SolveError::ListOutOfRange {
                    vertex,
                    target,
                    h: h.n(),
                });
            }
        }
        Ok(ListHomInstance { g, h, lists })
    }

    #[inline]
    pub fn list(&self, v: usize) -> &BitSet {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BitSet] {
        &self.lists
    }

    #[inline]
    pub fn allowed(&self, v: usize, u: usize) -> bool {
        self.lists[v].contains(u)
    }

    pub fn list_is_full(&self, v: usize) -> bool {
        self.lists[v].count() == self.h.n()
    }

    /// True when every list is `V(h)`, i.e. the instance is plain HOM.
    pub fn has_full_lists(&self) -> bool {
        (0..self.g.n()).all(|v| self.list_is_full(v))
    }
}

/// A vertex map `V(g) -> V(h)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Homomorphism(pub Vec<usize>);

impl Homomorphism {
    pub fn targets(&self) -> &[usize] {
        &self.0
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

fn check_shape(inst: &ListHomInstance, m: &Homomorphism) -> Result<(), SolveError> {
    if m.len() != inst.g.n() {
        return Err(SolveError::LengthMismatch {
            found: m.len(),
            expected: inst.g.n(),
        });
    }
    if let Some((vertex, &target)) = m.0.iter().enumerate().find(|(_, &u)| u >= inst.h.n()) {
        return Err(SolveError::TargetOutOfRange {
            vertex,
            target,
            h: inst.h.n(),
        });
    }
    Ok(())
}

/// Whether `m` is a list homomorphism, and in locally injective mode also
/// injective on every neighborhood of `g`.
pub fn verify(inst: &ListHomInstance, m: &Homomorphism, mode: Mode) -> Result<bool, SolveError> {
    check_shape(inst, m)?;
    Ok(violation(inst, m, mode).is_none())
}

/// Why a well-formed map fails to verify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    List { vertex: usize },
    Edge { u: usize, v: usize },
    Collision { center: usize, u: usize, v: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Violation::List { vertex } => {
                write!(f, "vertex {} is mapped outside its list", vertex + 1)
            }
            Violation::Edge { u, v } => {
                write!(f, "edge {{{}, {}}} is mapped to a non-edge", u + 1, v + 1)
            }
            Violation::Collision { center, u, v } => write!(
                f,
                "neighbors {} and {} of vertex {} share an image",
                u + 1,
                v + 1,
                center + 1
            ),
        }
    }
}

/// First violated condition, for diagnostics; `m` must be well formed.
pub fn violation(inst: &ListHomInstance, m: &Homomorphism, mode: Mode) -> Option<Violation> {
    let img = &m.0;
    if let Some(vertex) = (0..inst.g.n()).find(|&v| !inst.allowed(v, img[v])) {
        return Some(Violation::List { vertex });
    }
    if let Some((u, v)) = inst
        .g
        .edges()
        .find(|&(u, v)| !inst.h.has_edge(img[u], img[v]))
    {
        return Some(Violation::Edge { u, v });
    }
    if mode == Mode::LocallyInjective {
        // owner[a] = (center, neighbor) that last claimed image a
        let mut owner = vec![(usize::MAX, 0); inst.h.n()];
        for center in 0..inst.g.n() {
            for &u in inst.g.neighbors(center) {
                let (c, v) = owner[img[u]];
                if c == center {
                    return Some(Violation::Collision { center, u: v, v: u });
                }
                owner[img[u]] = (center, u);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_examples() {
        let k3 = ListHomInstance::full(Graph::complete(3), Graph::complete(3));
        assert!(verify(&k3, &Homomorphism(vec![0, 1, 2]), Mode::Plain).unwrap());

        let p = ListHomInstance::full(Graph::path(3), Graph::complete(2));
        let m = Homomorphism(vec![0, 1, 0]);
        assert!(verify(&p, &m, Mode::Plain).unwrap());
        assert!(!verify(&p, &m, Mode::LocallyInjective).unwrap());

        let c5 = ListHomInstance::full(Graph::cycle(5), Graph::complete(3));
        assert!(verify(&c5, &Homomorphism(vec![0, 1, 0, 1, 2]), Mode::Plain).unwrap());
    }

    #[test]
    fn verify_rejects_malformed_maps() {
        let inst = ListHomInstance::full(Graph::complete(2), Graph::complete(2));
        assert_eq!(
            verify(&inst, &Homomorphism(vec![0]), Mode::Plain),
            Err(SolveError::LengthMismatch {
                found: 1,
                expected: 2
            })
        );
        assert_eq!(
            verify(&inst, &Homomorphism(vec![0, 2]), Mode::Plain),
            Err(SolveError::TargetOutOfRange {
                vertex: 1,
                target: 2,
                h: 2
            })
        );
    }

    #[test]
    fn verify_checks_lists() {
        let inst = ListHomInstance::new(
            Graph::complete(2),
            Graph::complete(2),
            vec![vec![1], vec![0, 1]],
        )
        .unwrap();
        assert!(!verify(&inst, &Homomorphism(vec![0, 1]), Mode::Plain).unwrap());
        assert!(verify(&inst, &Homomorphism(vec![1, 0]), Mode::Plain).unwrap());
        assert!(ListHomInstance::new(Graph::empty(1), Graph::empty(1), vec![vec![1]]).is_err());
    }
}
