//! Benchmarks, comparisons, sweeps, worst-case inputs and self-checks.

mod ablation;
mod benchmark;
mod compare;
pub mod suite;
mod sweep;
pub mod verify;
pub mod worst_case;

pub use ablation::{ablation_cp_only, ablation_ep_only, AblationMode};
pub use benchmark::{ratio, reduction, static_benchmark};
pub use compare::{
    offline_reference, run_comparison, AlgorithmResult, ExperimentReport, InstanceSummary, RatioCheck, SweepPoint,
    SweepTable, DECOMPOSED, JOINT_OPTIMAL, REPORT_SCHEMA,
};
pub use sweep::{sweep_generators, sweep_lookahead};
