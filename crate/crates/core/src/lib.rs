//! Exact enumeration of minimal connected dominating sets.
//!
//! The structured path probes the graph for a bounded-degree spanning subgraph. If
//! one exists, candidates are drawn from small sets plus a subset-closed family of
//! sets with many low-degree vertices ([`dense`]). Otherwise the probe's `(L, H, R)`
//! partition drives a branch-and-reduce search over `H ∪ R` ([`sparse`]). A
//! brute-force [`oracle`] backs both.
//!
//! ```
//! use mcds_core::{enumerate_mcds, Graph, RunConfig};
//!
//! let (sets, report) = enumerate_mcds(&Graph::cycle(5), &RunConfig::default()).unwrap();
//! assert_eq!(sets.len(), 5);
//! assert_eq!(report.mcds_count, 5);
//! ```

pub mod dense;
pub mod driver;
pub mod error;
pub mod family;
pub mod fraction;
pub mod generate;
pub mod graph;
pub mod io;
pub mod kernel;
pub mod oracle;
pub mod probe;
pub mod sparse;
pub mod subsets;
pub mod vertex_set;

pub use dense::{enumerate_dense, DenseParams};
pub use driver::{
    enumerate_mcds, extremal_search, format_sets, Algo, CaseTaken, EnumerationReport, ProbeSummary,
    RunConfig,
};
pub use error::{Error, Result};
pub use family::{enumerate_downward_closed, enumerate_upward_closed, FamilySpec};
pub use fraction::Fraction;
pub use graph::{ContractionMap, Graph};
pub use io::{parse_graph, write_edge_list, InputFormat};
pub use kernel::{is_cds, is_minimal_cds, is_minimal_extension, low_degree_set};
pub use oracle::{oracle_enumerate, oracle_extensions};
pub use probe::{greedy_probe, ProbeParams, ProbeResult};
pub use sparse::{enumerate_sparse, reduce_instance, ExtensionInstance, ReducedInstance};
pub use vertex_set::VertexSet;
