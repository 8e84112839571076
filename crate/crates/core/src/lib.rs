//! Cost-minimizing operation of a data center that can switch servers on and
//! off and draw energy from both the grid and on-site generators.
//!
//! - [`model`]: power, generator and cost model.
//! - [`offline`]: exact and decomposed solvers with full knowledge of the future.
//! - [`online`]: look-ahead algorithms and their competitive bounds.
//! - [`analysis`]: benchmarks, comparisons, sweeps and verification suites.
//! - [`harness`]: trace files, run configuration and reports.

pub mod analysis;
pub mod error;
pub mod harness;
pub mod model;
pub mod offline;
pub mod online;

pub use error::{Error, Result};
pub use model::{CostBreakdown, GeneratorModel, Instance, PowerModel, Schedule, ServerModel};
