//! Report emission. JSON mirrors the report structs; CSV is one long table
//! `section,axis,axis_value,algorithm,metric,value`.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::analysis::{AlgorithmResult, ExperimentReport, REPORT_SCHEMA};
use crate::error::Result;
use crate::model::{CostBreakdown, Schedule};

use super::config::Format;

/// Metrics written per algorithm in CSV output.
pub const CSV_METRICS: [&str; 7] =
    ["grid", "onsite_fuel", "maintenance", "server_switching", "generator_startup", "total", "reduction"];

fn metric(r: &AlgorithmResult, name: &str) -> f64 {
    if name == "reduction" {
        r.reduction
    } else {
        r.cost.metric(name).unwrap_or(f64::NAN)
    }
}

pub fn emit_report<W: Write>(report: &ExperimentReport, format: Format, out: W) -> Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["section", "axis", "axis_value", "algorithm", "metric", "value"])?;
            for r in &report.algorithms {
                for m in CSV_METRICS {
                    w.write_record(["summary", "", "", &r.name, m, &metric(r, m).to_string()])?;
                }
            }
            for r in &report.ratios {
                let name = format!("{}/{}", r.algorithm, r.reference);
                w.write_record(["ratio", "", "", &name, "ratio", &r.ratio.to_string()])?;
                if let Some(b) = r.bound {
                    w.write_record(["ratio", "", "", &name, "bound", &b.to_string()])?;
                }
            }
            for s in &report.sweeps {
                for p in &s.points {
                    for r in &p.results {
                        for m in CSV_METRICS {
                            w.write_record(["sweep", &s.axis, &p.value.to_string(), &r.name, m, &metric(r, m).to_string()])?;
                        }
                    }
                }
            }
            w.flush()?;
        }
    }
    Ok(())
}

pub fn parse_report_json(src: &str) -> Result<ExperimentReport> {
    Ok(serde_json::from_str(src)?)
}

/// Result of running one algorithm.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub schema: String,
    pub algorithm: String,
    pub lookahead: usize,
    pub cost: CostBreakdown,
    pub schedule: Schedule,
}

impl SolveReport {
    pub fn new(algorithm: &str, lookahead: usize, cost: CostBreakdown, schedule: Schedule) -> Self {
        SolveReport { schema: REPORT_SCHEMA.into(), algorithm: algorithm.into(), lookahead, cost, schedule }
    }
}

/// JSON: the whole report. CSV: one row per slot, `t,x,y,u,v`.
pub fn emit_solve<W: Write>(report: &SolveReport, format: Format, out: W) -> Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            serde_json::to_writer_pretty(&mut out, report)?;
            out.write_all(b"\n")?;
        }
        Format::Csv => {
            let s = &report.schedule;
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["t", "x", "y", "u", "v"])?;
            for t in 0..s.len() {
                w.write_record([
                    (t + 1).to_string(),
                    s.x[t].to_string(),
                    s.y[t].to_string(),
                    s.u[t].to_string(),
                    s.v[t].to_string(),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
