//! Center-based attack simulation on undirected networks.
//!
//! The crate computes four centralities (degree, eccentricity, remoteness
//! and betweenness), removes the most central nodes of a network tier by
//! tier, and records how the largest connected component shrinks. It also
//! generates Erdős–Rényi, Watts–Strogatz and Barabási–Albert networks,
//! reads edge-list, Pajek and GML files, and writes CSV traces and SVG
//! charts.
//!
//! ```
//! use netvuln::{attack::AttackStrategy, graph::named};
//!
//! let trace = "RD".parse::<AttackStrategy>()?.run(&named::star(5))?;
//! assert_eq!(trace.last().lcc_size, 1);
//! # Ok::<(), netvuln::Error>(())
//! ```

pub mod attack;
pub mod centrality;
pub mod chart;
pub mod cli;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod metrics;

pub use attack::{AttackStrategy, AttackSummary, AttackTrace, Information};
pub use centrality::{CentralityKind, CentralityTiers};
pub use error::{Error, Result};
pub use generators::{GeneratorSpec, Model, ModelKind};
pub use graph::{ComponentPartition, Graph, NodeId};
pub use metrics::NetworkStats;
