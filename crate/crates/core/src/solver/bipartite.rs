//! Polynomial verdicts for plain HOM when the target is bipartite.

use super::{Homomorphism, ListHomInstance};
use crate::error::SolveError;
use crate::graph::bipartition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FastPath {
    Sat(Homomorphism),
    Unsat,
    /// The target is not bipartite; the fast path does not apply.
    NotApplicable,
}

/// With a bipartite target having an edge `{p, q}`, `g` maps into it iff `g`
/// is bipartite (send one side to `p`, the other to `q`). An edgeless target
/// only receives edgeless graphs.
pub fn bipartite_fast_path(inst: &ListHomInstance) -> Result<FastPath, SolveError> {
    if !inst.has_full_lists() {
        return Err(SolveError::RestrictedLists);
    }
    let (g, h) = (&inst.g, &inst.h);
    if g.n() == 0 {
        return Ok(FastPath::Sat(Homomorphism(Vec::new())));
    }
    if h.m() == 0 {
        return Ok(if g.m() == 0 && h.n() > 0 {
            FastPath::Sat(Homomorphism(vec![0; g.n()]))
        } else {
            FastPath::Unsat
        });
    }
    if bipartition(h).is_none() {
        return Ok(FastPath::NotApplicable);
    }
    let (p, q) = h.edges().next().expect("target has an edge");
    Ok(match bipartition(g) {
        Some(sides) => FastPath::Sat(Homomorphism(
            sides
                .colors()
                .iter()
                .map(|&c| if c == 1 { p } else { q })
                .collect(),
        )),
        None => FastPath::Unsat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solver::{verify, Mode};

    #[test]
    fn fast_path_examples() {
        let c4k2 = ListHomInstance::full(Graph::cycle(4), Graph::complete(2));
        let FastPath::Sat(w) = bipartite_fast_path(&c4k2).unwrap() else {
            panic!()
        };
        assert!(verify(&c4k2, &w, Mode::Plain).unwrap());

        let c5c4 = ListHomInstance::full(Graph::cycle(5), Graph::cycle(4));
        assert_eq!(bipartite_fast_path(&c5c4).unwrap(), FastPath::Unsat);

        let c5k3 = ListHomInstance::full(Graph::cycle(5), Graph::complete(3));
        assert_eq!(bipartite_fast_path(&c5k3).unwrap(), FastPath::NotApplicable);
    }

    #[test]
    fn edgeless_targets() {
        let ok = ListHomInstance::full(Graph::empty(3), Graph::empty(2));
        assert!(matches!(
            bipartite_fast_path(&ok).unwrap(),
            FastPath::Sat(_)
        ));
        let bad = ListHomInstance::full(Graph::path(2), Graph::empty(2));
        assert_eq!(bipartite_fast_path(&bad).unwrap(), FastPath::Unsat);
        let nothing = ListHomInstance::full(Graph::empty(1), Graph::empty(0));
        assert_eq!(bipartite_fast_path(&nothing).unwrap(), FastPath::Unsat);
    }

    #[test]
    fn rejects_lists() {
        let inst =
            ListHomInstance::new(Graph::empty(1), Graph::complete(2), vec![vec![0]]).unwrap();
        assert_eq!(bipartite_fast_path(&inst), Err(SolveError::RestrictedLists));
    }
}
