//! Graph homomorphism workbench: exact (list) homomorphism solvers, rigid
//! gadgets, and the reductions from 3-coloring to (list) homomorphism with
//! witness encoding and decoding along every step.

pub mod bitset;
pub mod coloring;
pub mod corpus;
pub mod cover;
pub mod error;
pub mod format;
pub mod gadgets;
pub mod graph;
pub mod grouping;
pub mod reductions;
pub mod solver;

pub use bitset::BitSet;
pub use coloring::{brute_chromatic, greedy_coloring, three_coloring, VertexColoring};
pub use cover::{is_vertex_cover, min_vertex_cover, vertex_cover_at_most};
pub use error::{GraphError, ReductionError, SolveError};
pub use graph::{
    bipartition as is_bipartite, random_graph_max_degree, square, Graph, GraphBuilder,
};
pub use grouping::{build_grouping, spanning_tree_partition, LabeledGrouping, Partition};
pub use reductions::{
    decode_witness, degree_reduce, encode_witness, pipeline_chi, pipeline_local, pipeline_main,
    pipeline_vc, reduce_3col_to_listhom, reduce_3col_to_listhom_vc, reduce_bound_chi,
    reduce_listhom_to_hom, PipelineRecord, Problem, ReductionRecord, Witness,
};
pub use solver::{
    bipartite_fast_path, enumerate_all, solve_backtrack, solve_brute, solve_vc, verify, FastPath,
    Homomorphism, ListHomInstance, Mode, SolveStats,
};
