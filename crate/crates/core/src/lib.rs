//! Dense subgraph discovery on graphs whose edges carry both a positive and a
//! negative weight.
//!
//! Solvers:
//!
//! * [`peeling`]: greedy peeling with the score `C deg+ - deg-`, best-prefix
//!   selection and a parallel sweep over `C`.
//! * [`exact`]: exact densest subgraph on nonnegative weights via min cut.
//! * [`search`]: binary search on the ratio objective
//!   `(w+(S) + l1 |S|) / (B w-(S) + l2 |S|)`.
//! * [`oracle`]: exhaustive search for small graphs.
//!
//! Applications live in [`uncertain`] (risk-averse subgraphs of graphs with
//! random edge rewards) and [`multilayer`] (subgraphs avoiding chosen layers).
//! [`testkit`] generates adversarial instances, and [`io`] and [`cli`] drive
//! everything from text files.
//!
//! Each capability has a runnable example under `examples/`, e.g.
//! `cargo run --example bad_peeling`.
//!
//! ```
//! use negdsd::{c_sweep, Scoring, SignedGraph, DEFAULT_C_LIST};
//!
//! let g = SignedGraph::from_net_edges(4, [(0, 1, 2.0), (1, 2, 2.0), (0, 2, 2.0), (2, 3, -5.0)])?;
//! let best = c_sweep(&g, &DEFAULT_C_LIST, &Scoring::NetDensity)?;
//! assert_eq!(best.nodes, vec![0, 1, 2]);
//! # Ok::<(), negdsd::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
mod maxflow;
pub mod multilayer;
pub mod objective;
pub mod oracle;
pub mod peeling;
pub mod result;
pub mod search;
pub mod testkit;
pub mod uncertain;

pub use error::{Error, Result};
pub use exact::{dsd_decision, exact_dsd, DecisionOutcome};
pub use graph::{build_signed_graph, NodeId, SignedEdge, SignedGraph, WeightedGraph};
pub use multilayer::{apply_exclusion, ExclusionQuery, MultilayerGraph, Penalty};
pub use objective::{objective_f, tilde_weights, ObjectiveParams};
pub use oracle::brute_force;
pub use peeling::{best_prefix, c_sweep, peel, peel_order, PeelScoring, DEFAULT_C_LIST};
pub use result::{Algorithm, DsdResult, Scoring};
pub use search::{binary_search_objective, SearchTrace};
pub use uncertain::{risk_profile, uncertain_to_signed, UncertainGraph};
