use hardhom_core::solver::{solve_backtrack_with, SearchLimits, SearchOutcome, VarOrder};
use hardhom_core::{
    min_vertex_cover, random_graph_max_degree, solve_backtrack, solve_brute, solve_vc, verify,
    Graph, GraphBuilder, ListHomInstance, Mode,
};
use proptest::prelude::*;

fn instance(n: usize, h: usize, seed: u64, list_bits: &[u8]) -> ListHomInstance {
    let g = random_graph_max_degree(n, 4, seed);
    let h = random_graph_max_degree(h, 4, seed ^ 0x9e37);
    let lists = (0..g.n())
        .map(|v| {
            let bits = list_bits.get(v).copied().unwrap_or(u8::MAX);
            (0..h.n()).filter(|&u| bits >> u & 1 == 1).collect()
        })
        .collect();
    ListHomInstance::new(g, h, lists).unwrap()
}

/// A random graph with a clique glued on, so that true twins appear.
fn with_clique(base: Graph, size: usize, attach: usize) -> Graph {
    let mut b = GraphBuilder::new(base.n());
    for (u, v) in base.edges() {
        b.edge(u, v);
    }
    let q = b.add_vertices(size);
    b.clique(&q);
    for &x in &q {
        b.edge(x, attach % base.n());
    }
    b.build()
}

fn check_agreement(inst: &ListHomInstance) {
    for mode in [Mode::Plain, Mode::LocallyInjective] {
        let oracle = solve_brute(inst, mode).unwrap();
        let (fast, _) = solve_backtrack(inst, mode);
        assert_eq!(fast.is_some(), oracle.is_some(), "{mode:?}");
        if let Some(w) = &fast {
            assert!(verify(inst, w, mode).unwrap());
        }
        let limits = SearchLimits {
            order: VarOrder::Index,
            ..Default::default()
        };
        match solve_backtrack_with(inst, mode, limits).0 {
            SearchOutcome::Sat(w) => {
                assert_eq!(Some(w), oracle, "index order finds the smallest witness")
            }
            SearchOutcome::Unsat => assert!(oracle.is_none()),
            SearchOutcome::Aborted => unreachable!(),
        }
    }
    let cover = min_vertex_cover(&inst.g);
    let (vc, stats) = solve_vc(inst, &cover).unwrap();
    assert_eq!(
        vc.is_some(),
        solve_brute(inst, Mode::Plain).unwrap().is_some()
    );
    assert!(stats.assignments_tried <= (inst.h.n() as u64).pow(cover.len() as u32));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn solvers_agree(n in 1usize..8, h in 1usize..6, seed in any::<u64>(), bits in proptest::collection::vec(any::<u8>(), 8)) {
        check_agreement(&instance(n, h, seed, &bits));
    }

    #[test]
    fn solvers_agree_with_twins(n in 2usize..6, h in 3usize..7, size in 2usize..4, seed in any::<u64>()) {
        let base = random_graph_max_degree(n, 3, seed);
        let g = with_clique(base, size, seed as usize);
        let h = with_clique(random_graph_max_degree(h, 4, seed ^ 1), 2, 0);
        check_agreement(&ListHomInstance::full(g, h));
    }
}

#[test]
fn odd_cycles_into_shorter_odd_cycles() {
    for (long, short) in [(7, 5), (5, 7), (9, 3), (3, 5)] {
        let inst = ListHomInstance::full(Graph::cycle(long), Graph::cycle(short));
        let expected = long >= short;
        assert_eq!(
            solve_backtrack(&inst, Mode::Plain).0.is_some(),
            expected,
            "C{long} -> C{short}"
        );
    }
}
