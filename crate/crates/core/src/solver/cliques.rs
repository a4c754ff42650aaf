//! Clique sizes used to filter domains before search: a clique through `v`
//! maps injectively onto a clique through the image of `v`.

use crate::bitset::BitSet;
use crate::graph::Graph;

/// For every vertex, the size of some clique containing it, grown greedily
/// by picking the candidate with the most neighbors among the candidates.
pub(crate) fn greedy_clique_sizes(g: &Graph) -> Vec<usize> {
    let mut cand = BitSet::new(g.n());
    let mut tmp = BitSet::new(g.n());
    (0..g.n())
        .map(|v| {
            cand.copy_from(g.neighbor_row(v));
            let mut size = 1;
            while !cand.is_empty() {
                let mut best = (0, usize::MAX);
                for u in cand.iter() {
                    tmp.copy_from(&cand);
                    tmp.intersect_with(g.neighbor_row(u));
                    let c = tmp.count();
                    if best.1 == usize::MAX || c > best.0 {
                        best = (c, u);
                    }
                }
                size += 1;
                cand.intersect_with(g.neighbor_row(best.1));
            }
            size
        })
        .collect()
}

/// For every vertex, `min(cap, size of the largest clique containing it)`.
pub(crate) fn capped_clique_numbers(h: &Graph, cap: usize) -> Vec<usize> {
    (0..h.n())
        .map(|u| {
            let mut best = 1;
            while best < cap && has_clique(h, h.neighbor_row(u), 1, best + 1) {
                best += 1;
            }
            best
        })
        .collect()
}

/// Whether `cand` holds a clique of `target - size` vertices.
fn has_clique(h: &Graph, cand: &BitSet, size: usize, target: usize) -> bool {
    if size >= target {
        return true;
    }
    if size + color_bound(h, cand) < target {
        return false;
    }
    let vs: Vec<usize> = cand.iter().collect();
    let mut rest = cand.clone();
    for v in vs {
        if size + rest.count() < target {
            return false;
        }
        let mut next = rest.clone();
        next.intersect_with(h.neighbor_row(v));
        if has_clique(h, &next, size + 1, target) {
            return true;
        }
        rest.remove(v);
    }
    false
}

/// Number of classes of a greedy coloring of `h[cand]`.
fn color_bound(h: &Graph, cand: &BitSet) -> usize {
    let mut left = cand.clone();
    let mut classes = 0;
    while let Some(first) = left.first() {
        classes += 1;
        let mut open = left.clone();
        let mut v = Some(first);
        while let Some(x) = v {
            left.remove(x);
            open.remove(x);
            open.difference_with(h.neighbor_row(x));
            v = open.first();
        }
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_sizes() {
        let g = Graph::wheel(5);
        assert_eq!(greedy_clique_sizes(&g), vec![3; 6]);
        assert_eq!(capped_clique_numbers(&g, 10), vec![3; 6]);
        let k5 = Graph::complete(5);
        assert_eq!(capped_clique_numbers(&k5, 4), vec![4; 5]);
        assert_eq!(greedy_clique_sizes(&Graph::empty(2)), vec![1, 1]);
        assert_eq!(capped_clique_numbers(&Graph::path(3), 5), vec![2, 2, 2]);
    }
}
