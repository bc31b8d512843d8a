//! Exact metric dimension for graphs built by point-attaching.
//!
//! The crate computes the metric dimension `dim(G)`, the upper dimension
//! `dim⁺(G)`, the attaching dimension `dim*(G_i)`, `τ_i` and the isolation
//! index `I(G)` of small graphs by exact branch-and-bound, builds graphs by
//! identifying vertices of smaller ones (chains, block graphs, rooted and
//! corona products, and a few named families), and checks closed formulas
//! for the metric dimension of those constructions against the exact search.

pub mod cli;
pub mod composer;
mod cover;
pub mod error;
pub mod graph;
pub mod io;
pub mod metrics;
pub mod resolver;
pub mod theorems;

pub use error::{Error, Result};
pub use graph::{Graph, StandardKind};
pub use metrics::{DistMatrix, MetricProfile, TreeProfile};
pub use resolver::{Basis, Limits, ResolveReport, Resolver};
pub use theorems::{Verdict, VerificationReport};
