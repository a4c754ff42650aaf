//! LIST-HOM parameterized by a vertex cover: enumerate maps of the cover,
//! then extend to the independent remainder one vertex at a time.

use super::{Homomorphism, ListHomInstance, SolveStats};
use crate::bitset::BitSet;
use crate::cover::uncovered_edge;
use crate::error::SolveError;

/// Tries every list-respecting map of `cover`. A map is accepted when it is a
/// list homomorphism on the cover and every vertex outside the cover has a
/// list value adjacent to all images of its neighbors (all of which lie in
/// the cover). `assignments_tried` counts the complete cover maps examined,
/// so it never exceeds `h^|cover|`.
pub fn solve_vc(
    inst: &ListHomInstance,
    cover: &[usize],
) -> Result<(Option<Homomorphism>, SolveStats), SolveError> {
    let (g, h) = (&inst.g, &inst.h);
    if let Some(&v) = cover.iter().find(|&&v| v >= g.n()) {
        return Err(SolveError::CoverOutOfRange(v));
    }
    if let Some((u, v)) = uncovered_edge(g, cover) {
        return Err(SolveError::NotACover(u, v));
    }
    let mut cov: Vec<usize> = cover.to_vec();
    cov.sort_unstable();
    cov.dedup();
    let mut in_cover = vec![false; g.n()];
    cov.iter().for_each(|&v| in_cover[v] = true);
    let outside: Vec<usize> = (0..g.n()).filter(|&v| !in_cover[v]).collect();

    let mut stats = SolveStats::default();
    let lists: Vec<Vec<usize>> = cov.iter().map(|&v| inst.list(v).iter().collect()).collect();
    let mut img = vec![usize::MAX; g.n()];
    let mut scratch = BitSet::new(h.n());

    // odometer over the cover; a prefix that already breaks an edge or list
    // inside the cover cannot be completed and is skipped wholesale
    let k = cov.len();
    let mut pos = vec![0usize; k];
    let mut i = 0;
    let mut fresh = true;
    loop {
        if k > 0 {
            if !fresh {
                pos[i] += 1;
            }
            fresh = false;
            if pos[i] == lists[i].len() {
                pos[i] = 0;
                img[cov[i]] = usize::MAX;
                if i == 0 {
                    return Ok((None, stats));
                }
                i -= 1;
                continue;
            }
            let v = cov[i];
            let a = lists[i][pos[i]];
            img[v] = a;
            let ok = g
                .neighbors(v)
                .iter()
                .all(|&u| img[u] == usize::MAX || h.has_edge(img[u], a));
            if !ok {
                continue;
            }
            if i + 1 < k {
                i += 1;
                fresh = true;
                continue;
            }
        }
        stats.assignments_tried += 1;
        if extend(inst, &outside, &mut img, &mut scratch) {
            return Ok((Some(Homomorphism(img)), stats));
        }
        if k == 0 {
            return Ok((None, stats));
        }
    }
}

/// Fills in every vertex outside the cover, or reports that one cannot be
/// placed. Leaves outside vertices unset on failure.
fn extend(
    inst: &ListHomInstance,
    outside: &[usize],
    img: &mut [usize],
    scratch: &mut BitSet,
) -> bool {
    for (j, &v) in outside.iter().enumerate() {
        scratch.clear();
        scratch.union_with(inst.list(v));
        for &w in inst.g.neighbors(v) {
            scratch.intersect_with(inst.h.neighbor_row(img[w]));
        }
        match scratch.first() {
            Some(u) => img[v] = u,
            None => {
                for &w in &outside[..j] {
                    img[w] = usize::MAX;
                }
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::solver::{verify, Mode};

    #[test]
    fn vc_examples() {
        let star = ListHomInstance::full(Graph::star(3), Graph::complete(2));
        let (w, stats) = solve_vc(&star, &[0]).unwrap();
        assert!(verify(&star, &w.unwrap(), Mode::Plain).unwrap());
        assert!(stats.assignments_tried <= 2);

        let k3 = ListHomInstance::full(Graph::complete(3), Graph::complete(2));
        let (w, stats) = solve_vc(&k3, &[0, 1]).unwrap();
        assert!(w.is_none());
        assert!(stats.assignments_tried <= 4);
    }

    #[test]
    fn rejects_non_covers() {
        let inst = ListHomInstance::full(Graph::path(3), Graph::complete(2));
        assert_eq!(
            solve_vc(&inst, &[0]).unwrap_err(),
            SolveError::NotACover(1, 2)
        );
        assert_eq!(
            solve_vc(&inst, &[7]).unwrap_err(),
            SolveError::CoverOutOfRange(7)
        );
    }

    #[test]
    fn edgeless_graph_with_empty_cover() {
        let inst =
            ListHomInstance::new(Graph::empty(2), Graph::empty(2), vec![vec![1], vec![0]]).unwrap();
        let (w, stats) = solve_vc(&inst, &[]).unwrap();
        assert_eq!(w.unwrap().targets(), &[1, 0]);
        assert_eq!(stats.assignments_tried, 1);
        let bad = ListHomInstance::new(Graph::empty(1), Graph::empty(2), vec![vec![]]).unwrap();
        assert!(solve_vc(&bad, &[]).unwrap().0.is_none());
    }
}
