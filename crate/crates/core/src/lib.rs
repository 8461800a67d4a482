//! Maximum independent set approximation and coloring for graphs with a
//! bounded induced odd cycle packing number.
//!
//! The induced odd cycle packing number `iocp(G)` is the largest number of
//! odd cycles forming an induced subgraph with no edges between them.
//! Bipartite graphs have `iocp = 0`.
//!
//! ```
//! use oddcycle::{eptas_solve, Graph, SolveParams};
//!
//! let g = Graph::cycle(9);
//! let set = eptas_solve(&g, &SolveParams::paper(1, 2, 7)).unwrap();
//! assert!(oddcycle::check_independent(&g, &set).is_ok());
//! ```

pub mod coloring;
pub mod cycles;
pub mod eptas;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod noshort;
pub mod oracles;
pub mod qptas;
pub mod seed;
pub mod weights;

pub use coloring::{
    color_bounded_iocp, color_triangle_free, f_bound, locally_maximal_clique,
    maximal_triangle_packing, CliqueCertificate, Coloring, TrianglePacking,
};
pub use cycles::{
    girth, is_bipartite, odd_girth, shield_set, shortest_odd_cycle, two_coloring, OddCycle,
    OddGirth, ShieldSpec,
};
pub use eptas::{
    amplify, decompose, eptas_solve, q_bound, AmplifyResult, DecompositionResult, Mode, SolveParams,
};
pub use error::{Error, Result};
pub use flow::{max_weight_independent_set_bipartite, solve_bipartite, BipartiteSolution};
pub use generators::{
    find_k33, gen_disjoint_odd_cycles, gen_high_odd_girth, gnp, k33_free_complement,
    ConstructionReport,
};
pub use graph::{Graph, InducedSubgraph, Vertex};
pub use noshort::{
    maximal_short_odd_packing, no_short_odd_solve, select_spaced_cycle_vertices, PackingResult,
};
pub use oracles::{check_coloring, check_independent, CheckFailure, OracleLimits};
pub use qptas::{branch_witness, qptas_solve, BranchWitness, QptasParams};
pub use weights::VertexWeights;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/bipartite.md")]
    mod bipartite {}
    #[doc = include_str!("../../../book/src/short-odd-cycles.md")]
    mod short_odd_cycles {}
    #[doc = include_str!("../../../book/src/eptas.md")]
    mod eptas {}
    #[doc = include_str!("../../../book/src/coloring.md")]
    mod coloring {}
    #[doc = include_str!("../../../book/src/qptas.md")]
    mod qptas {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/oracles.md")]
    mod oracles {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
