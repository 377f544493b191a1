//! Listing, counting and detecting 4-cycles in simple undirected graphs.
//!
//! Two listing algorithms are provided. [`list_n2`] groups every 2-path by
//! its endpoint pair and runs in `O(n² + t)`. [`list_m43`] splits vertices at
//! degree `m^{1/3}`, orients edges by degree and groups only three classes
//! of 2-paths, which brings the cost down to `Õ(m^{4/3} + t)` on sparse
//! graphs. Both stream canonical cycles into a sink.
//!
//! ```
//! use std::ops::ControlFlow;
//! use fourcycle::{gen_grid, list_m43};
//!
//! let g = gen_grid(3, 4).unwrap();
//! let mut cycles = Vec::new();
//! let stats = list_m43(&g, |c| {
//!     cycles.push(c);
//!     ControlFlow::Continue(())
//! });
//! assert_eq!(stats.cycles, 6);
//! ```

pub mod cycle;
pub mod diagnostics;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;
pub mod io;
pub mod listing;
pub mod oracle;
pub mod partition;
pub mod two_paths;

pub use cycle::CanonicalCycle;
pub use diagnostics::{
    census_report, check_lhh_theorem, closed_4_walks, find_regular_partition, spectral_floor_check,
    trace_count, CensusReport, LhhTheoremCheck, RegularPartition,
};
pub use error::{Error, Result};
pub use generators::{
    gen_complete, gen_complete_bipartite, gen_cycle, gen_erdos_renyi, gen_grid, gen_lhh_adversary,
    gen_star,
};
pub use graph::{build_graph, common_neighbors, BuiltGraph, Graph, Vertex};
pub use listing::{count, count_codegree, detect, list_m43, list_n2, Algo, ListingStats};
pub use partition::{degree_partition, DegreePartition};
pub use two_paths::{
    enum_hhh_paths, enum_lcenter_paths, enum_oriented_lhh_paths, two_path_census, TwoPath,
    TwoPathCensus, TwoPathClass,
};
