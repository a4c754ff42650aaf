//! Exact minimum vertex cover by simple branching.

use crate::graph::Graph;

pub fn is_vertex_cover(g: &Graph, cover: &[usize]) -> bool {
    let mut inside = vec![false; g.n()];
    for &v in cover {
        if v >= g.n() {
            return false;
        }
        inside[v] = true;
    }
    g.edges().all(|(u, v)| inside[u] || inside[v])
}

/// First edge not touched by `cover`.
pub fn uncovered_edge(g: &Graph, cover: &[usize]) -> Option<(usize, usize)> {
    let mut inside = vec![false; g.n()];
    for &v in cover.iter().filter(|&&v| v < g.n()) {
        inside[v] = true;
    }
    g.edges().find(|&(u, v)| !inside[u] && !inside[v])
}

/// Minimum vertex cover, sorted ascending.
///
/// Branches on a maximum-degree vertex `v`: either `v` is in the cover or all
/// of its neighbors are. Degree-one vertices are resolved without branching
/// by taking their neighbor.
pub fn min_vertex_cover(g: &Graph) -> Vec<usize> {
    let mut k = 0;
    loop {
        if let Some(c) = vertex_cover_at_most(g, k) {
            return c;
        }
        k += 1;
    }
}

/// A vertex cover with at most `k` vertices, if one exists.
pub fn vertex_cover_at_most(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut alive = vec![true; g.n()];
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut chosen = Vec::new();
    if branch(g, &mut alive, &mut deg, &mut chosen, k) {
        chosen.sort_unstable();
        Some(chosen)
    } else {
        None
    }
}

fn take(g: &Graph, alive: &mut [bool], deg: &mut [usize], chosen: &mut Vec<usize>, v: usize) {
    alive[v] = false;
    chosen.push(v);
    for &u in g.neighbors(v) {
        if alive[u] {
            deg[u] -= 1;
        }
    }
}

fn untake(g: &Graph, alive: &mut [bool], deg: &mut [usize], chosen: &mut Vec<usize>) {
    let v = chosen.pop().expect("something to undo");
    for &u in g.neighbors(v) {
        if alive[u] {
            deg[u] += 1;
        }
    }
    alive[v] = true;
}

fn branch(
    g: &Graph,
    alive: &mut [bool],
    deg: &mut [usize],
    chosen: &mut Vec<usize>,
    budget: usize,
) -> bool {
    let mark = chosen.len();
    // forced moves: the neighbor of a degree-one vertex
    loop {
        let leaf = (0..g.n()).find(|&v| alive[v] && deg[v] == 1);
        let Some(leaf) = leaf else { break };
        if chosen.len() - mark >= budget {
            break;
        }
        let u = *g.neighbors(leaf).iter().find(|&&u| alive[u]).unwrap();
        take(g, alive, deg, chosen, u);
    }
    let used = chosen.len() - mark;
    let remaining_edges: usize = (0..g.n())
        .filter(|&v| alive[v])
        .map(|v| deg[v])
        .sum::<usize>()
        / 2;
    let result = if remaining_edges == 0 {
        true
    } else if used >= budget {
        false
    } else {
        let left = budget - used;
        let v = (0..g.n())
            .filter(|&v| alive[v])
            .max_by_key(|&v| (deg[v], std::cmp::Reverse(v)))
            .unwrap();
        let dv = deg[v];
        // a cover of size `left` can cover at most `left * dv` edges
        if remaining_edges > left * dv {
            false
        } else {
            take(g, alive, deg, chosen, v);
            if branch(g, alive, deg, chosen, left - 1) {
                true
            } else {
                untake(g, alive, deg, chosen);
                let nbrs: Vec<usize> = g
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&u| alive[u])
                    .collect();
                if nbrs.len() <= left {
                    for &u in &nbrs {
                        take(g, alive, deg, chosen, u);
                    }
                    if branch(g, alive, deg, chosen, left - nbrs.len()) {
                        true
                    } else {
                        for _ in &nbrs {
                            untake(g, alive, deg, chosen);
                        }
                        false
                    }
                } else {
                    false
                }
            }
        }
    };
    if !result {
        while chosen.len() > mark {
            untake(g, alive, deg, chosen);
        }
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph_max_degree;

    fn brute_cover_size(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                g.edges()
                    .all(|(u, v)| mask >> u & 1 == 1 || mask >> v & 1 == 1)
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn cover_examples() {
        assert!(min_vertex_cover(&Graph::empty(4)).is_empty());
        assert_eq!(min_vertex_cover(&Graph::star(3)), vec![0]);
        let p = min_vertex_cover(&Graph::path(4));
        assert_eq!(p.len(), 2);
        assert!(is_vertex_cover(&Graph::path(4), &p));
        assert_eq!(min_vertex_cover(&Graph::complete(5)).len(), 4);
    }

    #[test]
    fn cover_matches_subset_brute_force() {
        for seed in 0..150 {
            let n = (seed % 11) as usize;
            let g = random_graph_max_degree(n, 1 + (seed % 5) as usize, seed);
            let c = min_vertex_cover(&g);
            assert!(is_vertex_cover(&g, &c), "seed {seed}");
            assert_eq!(c.len(), brute_cover_size(&g), "seed {seed}");
        }
    }

    #[test]
    fn bounded_search_respects_budget() {
        let c5 = Graph::cycle(5);
        assert!(vertex_cover_at_most(&c5, 2).is_none());
        assert_eq!(vertex_cover_at_most(&c5, 3).unwrap().len(), 3);
        assert_eq!(uncovered_edge(&c5, &[0, 2]), Some((3, 4)));
    }
}
