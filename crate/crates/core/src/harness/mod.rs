//! Trace files, synthetic traces, run configuration and reports.

pub mod config;
pub mod report;
mod run;
pub mod synth;
pub mod trace;

pub use config::{Algorithm, Format, RunConfig};
pub use report::{emit_report, emit_solve, parse_report_json, SolveReport};
pub use run::solve;
pub use synth::{synthesize_trace, SynthSpec, TracePreset};
pub use trace::{load_trace, parse_trace, write_trace, Trace};
