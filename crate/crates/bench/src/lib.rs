//! Fixtures shared by the benchmarks.

use dcmkit::harness::{synthesize_trace, RunConfig, SynthSpec, TracePreset};
use dcmkit::Instance;

/// Synthetic New York instance with the default model.
pub fn synthetic_instance(days: usize, servers: u32, generators: u32) -> Instance {
    let spec = SynthSpec { seed: 42, days, servers, preset: TracePreset::NewYork };
    let mut cfg = RunConfig::default();
    cfg.generator.count = generators;
    cfg.synth = Some(dcmkit::harness::config::SynthConfig { days, servers, preset: "ny".into() });
    cfg.instance(&synthesize_trace(&spec)).expect("valid synthetic instance")
}
