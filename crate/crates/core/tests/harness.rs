use dcmkit::analysis::{run_comparison, sweep_generators, sweep_lookahead, REPORT_SCHEMA};
use dcmkit::harness::config::SynthConfig;
use dcmkit::harness::report::CSV_METRICS;
use dcmkit::harness::{
    emit_report, emit_solve, parse_report_json, parse_trace, solve, synthesize_trace, write_trace, Algorithm, Format,
    RunConfig, SolveReport, SynthSpec, TracePreset,
};
use dcmkit::offline::OfflineOptions;

fn synth(preset: TracePreset, days: usize) -> dcmkit::harness::Trace {
    synthesize_trace(&SynthSpec { seed: 3, days, servers: 120, preset })
}

fn small_config() -> RunConfig {
    RunConfig { synth: Some(SynthConfig { days: 3, servers: 40, preset: "ny".into() }), ..RunConfig::default() }
}

#[test]
fn synthetic_traces_have_diurnal_prices() {
    for preset in [TracePreset::NewYork, TracePreset::SanJose] {
        let t = synth(preset, 7);
        let regime = t.regime.as_ref().unwrap();
        let mean = |name: &str| {
            let v: Vec<f64> = t.price.iter().zip(regime).filter(|(_, r)| *r == name).map(|(p, _)| *p).collect();
            v.iter().sum::<f64>() / v.len() as f64
        };
        assert!(mean("day") > mean("night"), "{preset:?}");
        assert!(t.workload.iter().all(|&a| (0.0..=120.0).contains(&a)));
    }
}

#[test]
fn presets_keep_generation_economic() {
    let unit = 0.08 + 1.2 / 60.0;
    for preset in [TracePreset::NewYork, TracePreset::SanJose, TracePreset::Flat] {
        let t = synth(preset, 7);
        let peak = t.price.iter().cloned().fold(0.0, f64::max);
        assert!(peak > unit, "{preset:?} peak {peak}");
    }
}

#[test]
fn twenty_two_days_is_528_slots() {
    let cfg = RunConfig { synth: Some(SynthConfig::default()), ..RunConfig::default() };
    let inst = cfg.instance(&synthesize_trace(&cfg.synth_spec().unwrap().unwrap())).unwrap();
    assert_eq!(inst.horizon(), 528);
}

#[test]
fn trace_files_are_deterministic_and_reload() {
    let mut a = Vec::new();
    let mut b = Vec::new();
    write_trace(&synth(TracePreset::SanJose, 2), &mut a).unwrap();
    write_trace(&synth(TracePreset::SanJose, 2), &mut b).unwrap();
    assert_eq!(a, b);
    let back = parse_trace(a.as_slice()).unwrap();
    assert_eq!(back, synth(TracePreset::SanJose, 2));
}

#[test]
fn report_round_trips_and_counts_rows() {
    let cfg = small_config();
    let inst = cfg.instance(&synthesize_trace(&cfg.synth_spec().unwrap().unwrap())).unwrap();
    let opts = OfflineOptions::default();
    let mut report = run_comparison(&inst, 2, &opts).unwrap();
    assert_eq!(report.schema, REPORT_SCHEMA);

    let mut json = Vec::new();
    emit_report(&report, Format::Json, &mut json).unwrap();
    let back = parse_report_json(std::str::from_utf8(&json).unwrap()).unwrap();
    assert_eq!(back, report);

    let mut csv = Vec::new();
    emit_report(&report, Format::Csv, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let summary = text.lines().filter(|l| l.starts_with("summary,")).count();
    assert_eq!(summary, report.algorithms.len() * CSV_METRICS.len());

    report.sweeps.push(sweep_lookahead(&inst, &[0, 2, 4]).unwrap());
    report.sweeps.push(sweep_generators(&inst, &[0, 1, 2], 2, &opts).unwrap());
    let mut csv = Vec::new();
    emit_report(&report, Format::Csv, &mut csv).unwrap();
    let text = String::from_utf8(csv).unwrap();
    let sweep_rows = text.lines().filter(|l| l.starts_with("sweep,")).count();
    assert_eq!(sweep_rows, 2 * 3 * 2 * CSV_METRICS.len());
    let mut again = Vec::new();
    emit_report(&report, Format::Csv, &mut again).unwrap();
    assert_eq!(text.as_bytes(), again.as_slice());
}

#[test]
fn solve_csv_has_one_row_per_slot() {
    let cfg = small_config();
    let inst = cfg.instance(&synthesize_trace(&cfg.synth_spec().unwrap().unwrap())).unwrap();
    for algo in Algorithm::ALL {
        if algo == Algorithm::Bruteforce {
            continue;
        }
        let (schedule, cost) = solve(&inst, algo, 3, &cfg.offline_options()).unwrap();
        let report = SolveReport::new(algo.name(), 3, cost, schedule);
        let mut out = Vec::new();
        emit_solve(&report, Format::Csv, &mut out).unwrap();
        assert_eq!(String::from_utf8(out).unwrap().lines().count(), inst.horizon() + 1, "{algo}");
    }
}

#[test]
fn every_config_violation_is_rejected() {
    let bad = [
        r#"{"server": {"beta_s": -1}}"#,
        r#"{"server": {"c_idle": 0.3, "c_peak": 0.2}}"#,
        r#"{"generator": {"capacity": 0}}"#,
        r#"{"generator": {"c_o": -0.1}}"#,
        r#"{"generator": {"beta_g": -1}}"#,
        r#"{"cooling": {"kind": "preset", "region": "mars"}}"#,
        r#"{"cooling": {"kind": "quadratic", "b_max": 1, "period": 2, "regimes": [{"name": "a", "start": 0, "end": 1}]}}"#,
        r#"{"cooling": {"kind": "quadratic", "b_max": 0, "period": 1, "regimes": [{"name": "a", "start": 0, "end": 1}]}}"#,
        r#"{"conditioning": {"kind": "quadratic", "b_max": 1, "c2": -1, "c1": 0, "c0": 0}}"#,
        r#"{"synth": {"days": 0}}"#,
        r#"{"synth": {"preset": "tokyo"}}"#,
        r#"{"algorithm": "greedy"}"#,
        r#"{"output": {"format": "xml"}}"#,
        r#"{"sweep": {"lookahead": [1], "axis": "w"}}"#,
        r#"{"seed": -4}"#,
    ];
    for src in bad {
        assert!(RunConfig::from_json(src).is_err(), "accepted {src}");
    }
}
