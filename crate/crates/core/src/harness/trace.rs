//! CSV traces with header `t,workload,price[,regime]`, slots numbered from 1.

use std::io::{Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::model::{GeneratorModel, Instance, PowerModel};

#[derive(Debug, Clone, PartialEq)]
pub struct Trace {
    pub workload: Vec<f64>,
    pub price: Vec<f64>,
    /// Optional per-slot cooling regime names.
    pub regime: Option<Vec<String>>,
}

impl Trace {
    pub fn len(&self) -> usize {
        self.workload.len()
    }

    pub fn is_empty(&self) -> bool {
        self.workload.is_empty()
    }

    /// Largest `ceil(workload)`.
    pub fn peak_servers(&self) -> u32 {
        self.workload.iter().map(|a| a.ceil() as u32).max().unwrap_or(0)
    }

    /// Builds an instance; regime tags, when present, override the clock.
    pub fn to_instance(&self, power: PowerModel, generator: GeneratorModel) -> Result<Instance> {
        let tags = self
            .regime
            .as_ref()
            .map(|names| {
                names
                    .iter()
                    .enumerate()
                    .map(|(t, n)| {
                        power
                            .cooling
                            .regime_index(n)
                            .map(|i| i as u16)
                            .ok_or_else(|| Error::model(format!("slot {} names unknown cooling regime '{n}'", t + 1)))
                    })
                    .collect::<Result<Vec<u16>>>()
            })
            .transpose()?;
        let inst = Instance::new(self.workload.clone(), self.price.clone(), power, generator)?;
        match tags {
            Some(t) => inst.with_regimes(t),
            None => Ok(inst),
        }
    }
}

fn bad(line: u64, message: impl Into<String>) -> Error {
    Error::Trace { line, message: message.into() }
}

pub fn parse_trace<R: Read>(reader: R) -> Result<Trace> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header: Vec<String> = rdr.headers()?.iter().map(str::to_ascii_lowercase).collect();
    let with_regime = match header.as_slice() {
        [t, w, p] if t == "t" && w == "workload" && p == "price" => false,
        [t, w, p, r] if t == "t" && w == "workload" && p == "price" && r == "regime" => true,
        _ => return Err(bad(1, "header must be t,workload,price[,regime]")),
    };
    let mut trace = Trace { workload: Vec::new(), price: Vec::new(), regime: with_regime.then(Vec::new) };
    for rec in rdr.records() {
        let rec = rec?;
        let line = rec.position().map_or(0, |p| p.line());
        let want = if with_regime { 4 } else { 3 };
        if rec.len() != want {
            return Err(bad(line, format!("expected {want} fields, found {}", rec.len())));
        }
        let t: usize = rec[0].parse().map_err(|_| bad(line, format!("bad slot index '{}'", &rec[0])))?;
        if t != trace.workload.len() + 1 {
            return Err(bad(line, format!("non-contiguous slot index at line {line}")));
        }
        let num = |i: usize, what: &str| -> Result<f64> {
            let v: f64 = rec[i].parse().map_err(|_| bad(line, format!("bad {what} '{}'", &rec[i])))?;
            if !v.is_finite() {
                return Err(bad(line, format!("{what} must be finite")));
            }
            if v < 0.0 {
                return Err(bad(line, format!("negative {what} at line {line}")));
            }
            Ok(v)
        };
        trace.workload.push(num(1, "workload")?);
        trace.price.push(num(2, "price")?);
        if let Some(r) = trace.regime.as_mut() {
            r.push(rec[3].to_string());
        }
    }
    if trace.is_empty() {
        return Err(bad(1, "trace has no slots"));
    }
    Ok(trace)
}

pub fn load_trace(path: impl AsRef<Path>) -> Result<Trace> {
    parse_trace(std::fs::File::open(path)?)
}

pub fn write_trace<W: Write>(trace: &Trace, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    match &trace.regime {
        Some(_) => w.write_record(["t", "workload", "price", "regime"])?,
        None => w.write_record(["t", "workload", "price"])?,
    }
    for t in 0..trace.len() {
        let mut row = vec![(t + 1).to_string(), trace.workload[t].to_string(), trace.price[t].to_string()];
        if let Some(r) = &trace.regime {
            row.push(r[t].clone());
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let tr = Trace {
            workload: vec![1.5, 0.0, 2.25],
            price: vec![0.1, 0.2, 0.05],
            regime: Some(vec!["night".into(), "day".into(), "day".into()]),
        };
        let mut buf = Vec::new();
        write_trace(&tr, &mut buf).unwrap();
        assert_eq!(parse_trace(buf.as_slice()).unwrap(), tr);
    }

    #[test]
    fn gap_in_slot_index() {
        let src = "t,workload,price\n1,1.0,0.1\n2,1.0,0.1\n4,1.0,0.1\n";
        let err = parse_trace(src.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("non-contiguous slot index at line 4"), "{err}");
    }

    #[test]
    fn negative_values_rejected() {
        let src = "t,workload,price\n1,-1.0,0.1\n";
        let err = parse_trace(src.as_bytes()).unwrap_err().to_string();
        assert!(err.contains("negative workload at line 2"), "{err}");
        let src = "t,workload,price\n1,1.0,-0.1\n";
        assert!(parse_trace(src.as_bytes()).is_err());
    }

    #[test]
    fn bad_header() {
        assert!(parse_trace("slot,load,price\n1,1,1\n".as_bytes()).is_err());
    }
}
