use crate::error::Result;
use crate::model::{evaluate, Instance, Schedule};
use crate::offline::OfflineOptions;
use crate::online::{dcmon, gcsr};

use super::benchmark::static_benchmark;
use super::compare::{offline_reference, AlgorithmResult, SweepPoint, SweepTable};

/// Online costs for each look-ahead window.
pub fn sweep_lookahead(inst: &Instance, windows: &[usize]) -> Result<SweepTable> {
    let base = static_benchmark(inst)?.1.total;
    let points = windows
        .iter()
        .map(|&w| {
            let grid = evaluate(inst, &Schedule::grid_only(inst, gcsr(inst, w)?))?;
            let hybrid = evaluate(inst, &dcmon(inst, w)?)?;
            Ok(SweepPoint {
                value: w as f64,
                results: vec![AlgorithmResult::new("gcsr", grid, base), AlgorithmResult::new("dcmon", hybrid, base)],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { axis: "lookahead".into(), points })
}

/// Offline reference and online cost for each generator count.
pub fn sweep_generators(
    inst: &Instance,
    counts: &[u32],
    window: usize,
    opts: &OfflineOptions,
) -> Result<SweepTable> {
    let base = static_benchmark(inst)?.1.total;
    let points = counts
        .iter()
        .map(|&n| {
            let sized = inst.clone().with_generator(inst.generator().with_count(n))?;
            let (reference, label) = offline_reference(&sized, opts)?;
            let hybrid = evaluate(&sized, &dcmon(&sized, window)?)?;
            Ok(SweepPoint {
                value: f64::from(n),
                results: vec![
                    AlgorithmResult::new(label, reference.cost, base),
                    AlgorithmResult::new("dcmon", hybrid, base),
                ],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepTable { axis: "generators".into(), points })
}
