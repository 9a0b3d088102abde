//! netreport turns a raw network dataset into a readable report.
//!
//! The input is an edge list, optional node and edge attribute tables,
//! and a manifest describing where the data came from and what it may be
//! used for. The output is a report with validated manifest prose, point
//! statistics, distributions, and charts, plus machine-readable copies of
//! every number.
//!
//! Heavy per-node passes run data-parallel by default; the `parallel`
//! feature can be disabled for a sequential build. Both modes produce
//! bit-identical results.

pub mod dist;
pub mod error;
pub mod exec;
pub mod graph;
pub mod manifest;
pub mod report;
pub mod spectral;
pub mod stats;

pub use error::{Error, Result};
