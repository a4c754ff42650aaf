//! Vertex colorings with palette `1..=k`, greedy coloring and exhaustive
//! k-colorability search.

use crate::error::GraphError;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<u32>,
    k: u32,
}

impl VertexColoring {
    pub fn new(colors: Vec<u32>, k: u32) -> Result<Self, GraphError> {
        if let Some(&color) = colors.iter().find(|&&c| c == 0 || c > k) {
            return Err(GraphError::ColorOutOfRange { color, k });
        }
        Ok(VertexColoring { colors, k })
    }

    #[inline]
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    /// Palette size.
    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Number of distinct colors actually used.
    pub fn used(&self) -> usize {
        let mut seen = vec![false; self.k as usize + 1];
        self.colors.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&b| b).count()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// First edge whose endpoints share a color, if any.
    pub fn conflict(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges().find(|&(u, v)| self.colors[u] == self.colors[v])
    }

    pub fn into_colors(self) -> Vec<u32> {
        self.colors
    }
}

/// Scans vertices in index order, giving each the smallest color unused by
/// its already-colored neighbors. Uses at most `Δ + 1` colors.
pub fn greedy_coloring(g: &Graph) -> VertexColoring {
    greedy_in_order(g, 0..g.n())
}

pub(crate) fn greedy_in_order<I: IntoIterator<Item = usize>>(
    g: &Graph,
    order: I,
) -> VertexColoring {
    let mut colors = vec![0u32; g.n()];
    let mut taken = vec![usize::MAX; g.max_degree() + 2];
    let mut k = 0;
    for u in order {
        for &v in g.neighbors(u) {
            let c = colors[v] as usize;
            if c != 0 && c < taken.len() {
                taken[c] = u;
            }
        }
        let c = (1..)
            .find(|&c| taken[c] != u)
            .expect("palette has Δ+1 colors");
        colors[u] = c as u32;
        k = k.max(c as u32);
    }
    VertexColoring { colors, k }
}

/// Exhaustive search for a proper coloring with colors `1..=k`.
pub fn k_coloring(g: &Graph, k: u32) -> Option<VertexColoring> {
    let n = g.n();
    if n == 0 {
        return Some(VertexColoring {
            colors: Vec::new(),
            k,
        });
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0u32; n];
    let mut v = 0usize;
    loop {
        // advance colors[v] to the next value compatible with earlier vertices
        let mut c = colors[v] + 1;
        while c <= k && g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
            c += 1;
        }
        if c <= k {
            colors[v] = c;
            if v + 1 == n {
                return Some(VertexColoring { colors, k });
            }
            v += 1;
        } else {
            colors[v] = 0;
            if v == 0 {
                return None;
            }
            v -= 1;
        }
    }
}

/// Chromatic number if it is at most `cap`.
pub fn brute_chromatic(g: &Graph, cap: u32) -> Option<u32> {
    (0..=cap).find(|&k| k_coloring(g, k).is_some())
}

/// Proper 3-coloring by exhaustive search, colors in `1..=3`.
pub fn three_coloring(g: &Graph) -> Option<VertexColoring> {
    k_coloring(g, 3)
}

/// All proper colorings of the subgraph induced by `vertices` with colors
/// `1..=k`, each listed in the order of `vertices`; lexicographic order.
pub fn induced_colorings(g: &Graph, vertices: &[usize], k: u8) -> Vec<Vec<u8>> {
    let sub = g.induced(vertices);
    let n = sub.n();
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut colors = vec![0u8; n];
    let mut v = 0usize;
    loop {
        let mut c = colors[v] + 1;
        while c <= k && sub.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
            c += 1;
        }
        if c <= k {
            colors[v] = c;
            if v + 1 == n {
                out.push(colors.clone());
            } else {
                v += 1;
            }
        } else {
            colors[v] = 0;
            if v == 0 {
                return out;
            }
            v -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::random_graph_max_degree;

    #[test]
    fn greedy_examples() {
        let k4 = Graph::complete(4);
        let c = greedy_coloring(&k4);
        assert!(c.is_proper(&k4));
        assert_eq!(c.used(), 4);

        let e3 = Graph::empty(3);
        assert_eq!(greedy_coloring(&e3).colors(), &[1, 1, 1]);

        let c5 = Graph::cycle(5);
        let c = greedy_coloring(&c5);
        assert!(c.is_proper(&c5));
        assert!(c.k() <= 3);
    }

    #[test]
    fn greedy_is_proper_within_degree_bound() {
        for seed in 0..100 {
            let g = random_graph_max_degree(12, (seed % 6) as usize, seed);
            let c = greedy_coloring(&g);
            assert!(c.is_proper(&g));
            assert!(c.k() as usize <= g.max_degree() + 1);
        }
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(brute_chromatic(&Graph::complete(3), 4), Some(3));
        assert_eq!(brute_chromatic(&Graph::cycle(5), 4), Some(3));
        assert_eq!(brute_chromatic(&Graph::complete(4), 2), None);
        assert_eq!(brute_chromatic(&Graph::empty(3), 2), Some(1));
    }

    #[test]
    fn induced_colorings_count() {
        // a path on three vertices has 3 * 2 * 2 proper 3-colorings
        let p = Graph::path(3);
        let all = induced_colorings(&p, &[0, 1, 2], 3);
        assert_eq!(all.len(), 12);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(induced_colorings(&Graph::complete(4), &[0, 1, 2, 3], 3).is_empty());
    }

    #[test]
    fn rejects_out_of_palette() {
        assert!(VertexColoring::new(vec![1, 0], 2).is_err());
        assert!(VertexColoring::new(vec![1, 3], 2).is_err());
    }
}
