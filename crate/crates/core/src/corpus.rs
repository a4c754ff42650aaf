//! Graph families used by the tests, benches and the `bench` command.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{random_graph_max_degree, Graph, GraphBuilder};
use crate::solver::ListHomInstance;

/// Seed of the random half of [`standard_corpus`].
pub const CORPUS_SEED: u64 = 0x3c0105;

/// All connected graphs with `1..=max_n` vertices and maximum degree at most
/// `max_degree`, one per isomorphism class. Practical up to `max_n = 7`.
pub fn connected_graphs(max_n: usize, max_degree: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        let perms = permutations(n);
        let mut seen = HashSet::new();
        for mask in 0u64..1 << pairs.len() {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let mut deg = vec![0; n];
            for &(u, v) in &edges {
                deg[u] += 1;
                deg[v] += 1;
            }
            if deg.iter().any(|&d| d > max_degree) {
                continue;
            }
            let g = Graph::from_edges(n, edges.iter().copied()).expect("pairs are simple");
            if !g.is_connected() {
                continue;
            }
            if seen.insert(canonical_mask(&edges, &pairs, &perms, n)) {
                out.push(g);
            }
        }
    }
    out
}

/// Smallest edge mask over all relabelings.
fn canonical_mask(
    edges: &[(usize, usize)],
    pairs: &[(usize, usize)],
    perms: &[Vec<usize>],
    n: usize,
) -> u64 {
    let mut slot = vec![0usize; n * n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        slot[u * n + v] = i;
        slot[v * n + u] = i;
    }
    perms
        .iter()
        .map(|p| {
            edges
                .iter()
                .fold(0u64, |m, &(u, v)| m | 1 << slot[p[u] * n + p[v]])
        })
        .min()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// `count` graphs with `1..=max_n` vertices (uniform) and maximum degree at
/// most `max_degree`.
pub fn random_graphs(count: usize, max_n: usize, max_degree: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n);
            random_graph_max_degree(n, max_degree, rng.gen())
        })
        .collect()
}

/// Connected graphs with `n <= 6` and `Δ <= 4`, then 200 seeded random graphs
/// with `n <= 8` and `Δ <= 4`.
pub fn standard_corpus() -> Vec<Graph> {
    let mut out = connected_graphs(6, 4);
    out.extend(random_graphs(200, 8, 4, CORPUS_SEED));
    out
}

/// `count` graphs with `7..=9` vertices whose maximum degree is 6 or 7.
pub fn high_degree_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(7..=9);
        let g = random_graph_max_degree(n, 7, rng.gen());
        if (6..=7).contains(&g.max_degree()) {
            out.push(g);
        }
    }
    out
}

fn random_dense(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Graph {
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                b.edge(u, v);
            }
        }
    }
    b.build()
}

/// `count` LIST-HOM instances with `1..=max_n` source and `1..=max_h` target
/// vertices. Sources have edge density 0.4, targets 0.6, and each list keeps
/// every target vertex with probability 0.7.
pub fn random_instances(
    count: usize,
    max_n: usize,
    max_h: usize,
    seed: u64,
) -> Vec<ListHomInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let h = rng.gen_range(1..=max_h.max(1));
            let g = random_dense(&mut rng, n, 0.4);
            let target = random_dense(&mut rng, h, 0.6);
            let lists = (0..n)
                .map(|_| (0..h).filter(|_| rng.gen_bool(0.7)).collect())
                .collect();
            ListHomInstance::new(g, target, lists).expect("lists are in range")
        })
        .collect()
}
