//! Degree reduction for 3-coloring: every vertex of degree `d > 5` becomes a
//! chain of `d` copies glued by triangles, which forces all copies to share a
//! color while each copy keeps one of the original edges.

use crate::coloring::VertexColoring;
use crate::error::ReductionError;
use crate::graph::{Graph, GraphBuilder};

/// The replacement of one vertex: copies `v_1..v_d` (with `v_1` the vertex
/// itself) and the triangle tips `a_1..a_{d-1}`, `b_1..b_{d-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Replacement {
    pub vertex: usize,
    pub copies: Vec<usize>,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeMap {
    pub original_n: usize,
    /// Vertices of the output that stand for each input vertex.
    pub representative: Vec<usize>,
    pub replacements: Vec<Replacement>,
}

impl DegreeMap {
    /// Vertices added beyond the input's, `sum (d - 1) + 2(d - 1)`; together
    /// with the reused vertex each replacement has `d + 2(d - 1)` vertices.
    pub fn added(&self) -> usize {
        self.replacements
            .iter()
            .map(|r| r.copies.len() - 1 + r.a.len() + r.b.len())
            .sum()
    }

    pub fn decode_coloring(&self, c: &VertexColoring) -> Result<VertexColoring, ReductionError> {
        let colors = self.representative.iter().map(|&v| c.color(v)).collect();
        Ok(VertexColoring::new(colors, c.k())?)
    }

    /// Copies take the color of their vertex; each triangle tip pair takes
    /// the two remaining colors.
    pub fn encode_coloring(
        &self,
        c: &VertexColoring,
        out_n: usize,
    ) -> Result<VertexColoring, ReductionError> {
        if c.k() > 3 {
            return Err(ReductionError::BadWitness("expected a 3-coloring".into()));
        }
        let mut colors = vec![1u32; out_n];
        colors[..self.original_n].copy_from_slice(c.colors());
        for r in &self.replacements {
            let own = c.color(r.vertex);
            let others: Vec<u32> = (1..=3).filter(|&x| x != own).collect();
            for &v in &r.copies {
                colors[v] = own;
            }
            for (&a, &b) in r.a.iter().zip(&r.b) {
                colors[a] = others[0];
                colors[b] = others[1];
            }
        }
        Ok(VertexColoring::new(colors, 3)?)
    }
}

/// Replaces every vertex of degree above five. Vertex `v` keeps its index as
/// `v_1`; new vertices are appended replacement by replacement. The edge to
/// the `i`-th neighbor `u_i` (in index order) leaves from `v_i`.
pub fn degree_reduce(g: &Graph) -> (Graph, DegreeMap) {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    let mut replacements = Vec::new();
    // endpoint[v][i]: the copy of v that carries the edge to its i-th neighbor
    let mut endpoint: Vec<Vec<usize>> = (0..n).map(|v| vec![v; g.degree(v)]).collect();
    for v in 0..n {
        let d = g.degree(v);
        if d <= 5 {
            continue;
        }
        let mut copies = vec![v];
        copies.extend(b.add_vertices(d - 1));
        let a = b.add_vertices(d - 1);
        let bs = b.add_vertices(d - 1);
        for i in 0..d - 1 {
            b.edge(copies[i], a[i]);
            b.edge(a[i], bs[i]);
            b.edge(bs[i], copies[i]);
            b.edge(copies[i + 1], a[i]);
            b.edge(copies[i + 1], bs[i]);
        }
        endpoint[v] = copies.clone();
        replacements.push(Replacement {
            vertex: v,
            copies,
            a,
            b: bs,
        });
    }
    for (u, v) in g.edges() {
        let iu = g.neighbors(u).binary_search(&v).unwrap();
        let iv = g.neighbors(v).binary_search(&u).unwrap();
        b.edge(endpoint[u][iu], endpoint[v][iv]);
    }
    let map = DegreeMap {
        original_n: n,
        representative: (0..n).collect(),
        replacements,
    };
    (b.build(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::three_coloring;

    #[test]
    fn low_degree_is_unchanged() {
        let g = Graph::wheel(5);
        let (out, map) = degree_reduce(&g);
        assert_eq!(out, g);
        assert_eq!(map.added(), 0);
    }

    #[test]
    fn star_center_becomes_sixteen_vertices() {
        let g = Graph::star(6);
        let (out, map) = degree_reduce(&g);
        assert_eq!(out.n(), 7 - 1 + 16);
        assert!(out.max_degree() <= 5);
        let c = three_coloring(&out).unwrap();
        assert!(map.decode_coloring(&c).unwrap().is_proper(&g));
    }

    #[test]
    fn wheel_colorability_is_preserved() {
        for rim in [6, 7] {
            let g = Graph::wheel(rim);
            let (out, map) = degree_reduce(&g);
            assert!(out.max_degree() <= 5);
            assert_eq!(three_coloring(&g).is_some(), three_coloring(&out).is_some());
            if let Some(c) = three_coloring(&g) {
                let up = map.encode_coloring(&c, out.n()).unwrap();
                assert!(up.is_proper(&out));
            }
        }
    }
}
