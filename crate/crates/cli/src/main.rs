//! `dcmkit` command line: trace synthesis, single solves, comparison reports,
//! parameter sweeps and the self-check suite.
//!
//! Exit codes: 0 success, 1 validation or I/O error, 2 solver capacity
//! error, 3 verification failure.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use dcmkit::analysis::verify::{run_verify, CheckResult};
use dcmkit::analysis::{run_comparison, sweep_generators, sweep_lookahead, ExperimentReport};
use dcmkit::harness::{
    emit_report, emit_solve, load_trace, solve, synthesize_trace, write_trace, Algorithm, Format, RunConfig,
    SolveReport, SynthSpec, TracePreset,
};
use dcmkit::{Error, Instance};

const EXIT_VALIDATION: u8 = 1;
const EXIT_CAPACITY: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(name = "dcmkit", version, about = "Joint energy supply and server capacity planning for data centers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded synthetic trace.
    Synth(SynthArgs),
    /// Run one algorithm on one instance.
    Solve(SolveArgs),
    /// Benchmark, offline references and online algorithms side by side.
    Compare(CommonArgs),
    /// Costs across look-ahead windows or generator counts.
    Sweep(SweepArgs),
    /// Randomized agreement, bound and causality checks.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Trace CSV with header `t,workload,price[,regime]`.
    #[arg(long)]
    trace: Option<PathBuf>,
    /// JSON run configuration.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Look-ahead window in slots.
    #[arg(long)]
    lookahead: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Seed for synthesized traces.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    algo: Option<AlgoArg>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum, default_value = "lookahead")]
    axis: Axis,
    /// Comma-separated axis values; defaults to the config or a standard grid.
    #[arg(long, value_delimiter = ',')]
    values: Vec<u32>,
}

#[derive(Args)]
struct SynthArgs {
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    days: Option<usize>,
    #[arg(long)]
    servers: Option<u32>,
    /// ny, sj or flat.
    #[arg(long)]
    preset: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Random instances per check.
    #[arg(long, default_value_t = 200)]
    instances: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Offline,
    Bruteforce,
    Gcsr,
    Chase,
    Dcmon,
    Static,
    Cpoff,
    Ofa,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Algorithm {
        match a {
            AlgoArg::Offline => Algorithm::Offline,
            AlgoArg::Bruteforce => Algorithm::Bruteforce,
            AlgoArg::Gcsr => Algorithm::Gcsr,
            AlgoArg::Chase => Algorithm::Chase,
            AlgoArg::Dcmon => Algorithm::Dcmon,
            AlgoArg::Static => Algorithm::Static,
            AlgoArg::Cpoff => Algorithm::Cpoff,
            AlgoArg::Ofa => Algorithm::Ofa,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Axis {
    Lookahead,
    Generators,
}

/// Failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_capacity() { EXIT_CAPACITY } else { EXIT_VALIDATION };
        Failure { code, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: EXIT_VALIDATION, message: e.to_string() }
    }
}

type CliResult<T = ()> = std::result::Result<T, Failure>;

fn load_config(path: Option<&PathBuf>) -> CliResult<RunConfig> {
    match path {
        Some(p) => RunConfig::load(p).map_err(|e| Failure::from(e).with_context(&p.display().to_string())),
        None => Ok(RunConfig::default()),
    }
}

impl Failure {
    fn with_context(self, what: &str) -> Self {
        Failure { message: format!("{what}: {}", self.message), ..self }
    }
}

/// Writes to `--out` when given, otherwise to standard output.
fn write_out(out: Option<&PathBuf>, bytes: &[u8]) -> CliResult {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| Failure::from(e).with_context(&p.display().to_string())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}

/// Config with command-line overrides applied, plus the instance it describes.
struct Prepared {
    cfg: RunConfig,
    inst: Instance,
    out: Option<PathBuf>,
}

fn prepare(args: &CommonArgs) -> CliResult<Prepared> {
    let mut cfg = load_config(args.config.as_ref())?;
    if let Some(w) = args.lookahead {
        cfg.lookahead = w;
    }
    if let Some(f) = args.format {
        cfg.output.format = f.into();
    }
    if let Some(s) = args.seed {
        cfg.seed = s;
    }
    let trace = match (&args.trace, cfg.synth_spec()?) {
        (Some(p), _) => {
            cfg.synth = None;
            load_trace(p).map_err(|e| Failure::from(e).with_context(&p.display().to_string()))?
        }
        (None, Some(spec)) => synthesize_trace(&spec),
        (None, None) => {
            return Err(Failure {
                code: EXIT_VALIDATION,
                message: "no input: pass --trace or set `synth` in the config".into(),
            })
        }
    };
    let inst = cfg.instance(&trace)?;
    let out = args.out.clone().or_else(|| cfg.output.path.clone().map(PathBuf::from));
    Ok(Prepared { cfg, inst, out })
}

fn cmd_synth(args: &SynthArgs) -> CliResult {
    let cfg = load_config(args.config.as_ref())?;
    let base = cfg.synth.clone().unwrap_or_default();
    let preset = TracePreset::parse(args.preset.as_deref().unwrap_or(&base.preset))?;
    let spec = SynthSpec {
        seed: args.seed.unwrap_or(cfg.seed),
        days: args.days.unwrap_or(base.days),
        servers: args.servers.unwrap_or(base.servers),
        preset,
    };
    if spec.days == 0 || spec.servers == 0 {
        return Err(Error::Config("synth needs days and servers above zero".into()).into());
    }
    let mut buf = Vec::new();
    write_trace(&synthesize_trace(&spec), &mut buf)?;
    write_out(args.out.as_ref(), &buf)
}

fn cmd_solve(args: &SolveArgs) -> CliResult {
    let mut p = prepare(&args.common)?;
    if let Some(a) = args.algo {
        p.cfg.algorithm = a.into();
    }
    let algo = p.cfg.algorithm;
    let (schedule, cost) = solve(&p.inst, algo, p.cfg.lookahead, &p.cfg.offline_options())?;
    let report = SolveReport::new(algo.name(), p.cfg.lookahead, cost, schedule);
    let mut buf = Vec::new();
    emit_solve(&report, p.cfg.output.format, &mut buf)?;
    write_out(p.out.as_ref(), &buf)
}

fn attach_config_sweeps(report: &mut ExperimentReport, p: &Prepared) -> CliResult {
    let opts = p.cfg.offline_options();
    if !p.cfg.sweep.lookahead.is_empty() {
        report.sweeps.push(sweep_lookahead(&p.inst, &p.cfg.sweep.lookahead)?);
    }
    if !p.cfg.sweep.generators.is_empty() {
        report.sweeps.push(sweep_generators(&p.inst, &p.cfg.sweep.generators, p.cfg.lookahead, &opts)?);
    }
    Ok(())
}

fn emit(report: &ExperimentReport, p: &Prepared) -> CliResult {
    let mut buf = Vec::new();
    emit_report(report, p.cfg.output.format, &mut buf)?;
    write_out(p.out.as_ref(), &buf)
}

fn cmd_compare(args: &CommonArgs) -> CliResult {
    let p = prepare(args)?;
    let mut report = run_comparison(&p.inst, p.cfg.lookahead, &p.cfg.offline_options())?;
    attach_config_sweeps(&mut report, &p)?;
    emit(&report, &p)
}

fn cmd_sweep(args: &SweepArgs) -> CliResult {
    let p = prepare(&args.common)?;
    let opts = p.cfg.offline_options();
    let mut report = run_comparison(&p.inst, p.cfg.lookahead, &opts)?;
    let table = match args.axis {
        Axis::Lookahead => {
            let values: Vec<usize> = if !args.values.is_empty() {
                args.values.iter().map(|&v| v as usize).collect()
            } else if !p.cfg.sweep.lookahead.is_empty() {
                p.cfg.sweep.lookahead.clone()
            } else {
                vec![0, 1, 2, 4, 8, 12, 16, 24]
            };
            sweep_lookahead(&p.inst, &values)?
        }
        Axis::Generators => {
            let values: Vec<u32> = if !args.values.is_empty() {
                args.values.clone()
            } else if !p.cfg.sweep.generators.is_empty() {
                p.cfg.sweep.generators.clone()
            } else {
                (0..=p.inst.generator().count).collect()
            };
            sweep_generators(&p.inst, &values, p.cfg.lookahead, &opts)?
        }
    };
    report.sweeps.push(table);
    emit(&report, &p)
}

fn emit_checks(checks: &[CheckResult], format: Format) -> CliResult<Vec<u8>> {
    let mut buf = Vec::new();
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut buf, checks).map_err(Error::from)?;
            buf.push(b'\n');
        }
        Format::Csv => {
            writeln!(buf, "check,cases,failures")?;
            for c in checks {
                writeln!(buf, "\"{}\",{},{}", c.name, c.cases, c.failures.len())?;
            }
        }
    }
    Ok(buf)
}

/// A check fails on any failed case, and also when it checked nothing.
fn verify_outcome(checks: &[CheckResult]) -> CliResult {
    let mut failed = 0;
    for c in checks {
        for f in &c.failures {
            eprintln!("{}: {f}", c.name);
        }
        if c.cases == 0 {
            eprintln!("{}: no cases checked", c.name);
        }
        if !c.passed() || c.cases == 0 {
            failed += 1;
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure { code: EXIT_VERIFY, message: format!("{failed} of {} checks failed", checks.len()) })
    }
}

fn cmd_verify(args: &VerifyArgs) -> CliResult {
    let checks = run_verify(args.seed, args.instances)?;
    write_out(args.out.as_ref(), &emit_checks(&checks, args.format.into())?)?;
    verify_outcome(&checks)
}

fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Synth(a) => cmd_synth(a),
        Command::Solve(a) => cmd_solve(a),
        Command::Compare(a) => cmd_compare(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Verify(a) => cmd_verify(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("dcmkit: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
