//! Offline solvers: the exact joint optimum on a layered state graph, the
//! per-server and per-generator slice algorithms, and exhaustive oracles.

mod brute;
mod cpoff;
mod dp;
mod regret;
mod slices;

pub use brute::{brute_force_cp, brute_force_dcm, brute_force_ep, BRUTE_FORCE_BUDGET};
pub use cpoff::{cpoff_slice, solve_cp_offline};
pub use dp::{solve_dcm_offline, OfflineOptions, OfflineSolution, PathMethod, DEFAULT_STATE_BUDGET};
pub use regret::{
    critical_segments, ofa_ep_slice, regret_increment, regret_step, solve_ep_offline, CriticalSegment,
    RegretProcess, SegmentKind,
};
pub use slices::{slice_demand, slice_energy, slice_workload};

use crate::model::{evaluate, Instance, Schedule};
use crate::Result;

/// True when an accumulated cost has reached a break-even threshold.
///
/// The slack absorbs summation noise so that exact ties resolve the same
/// way in every algorithm that compares against the threshold.
#[inline]
pub fn break_even_reached(sum: f64, threshold: f64) -> bool {
    sum >= threshold - 1e-12 * threshold.abs().max(1.0)
}

/// Offline CP solution followed by offline EP on the demand it induces.
pub fn solve_decomposed(inst: &Instance) -> Result<OfflineSolution> {
    let x = solve_cp_offline(inst);
    let demand = inst.demand_series(&x);
    let y = solve_ep_offline(&demand, inst.price(), inst.generator());
    let schedule = Schedule::dispatched(inst, x, y);
    let cost = evaluate(inst, &schedule)?;
    Ok(OfflineSolution { schedule, cost })
}
