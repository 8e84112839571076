use crate::analysis::static_benchmark;
use crate::error::Result;
use crate::model::{evaluate, CostBreakdown, Instance, Schedule};
use crate::offline::{brute_force_dcm, solve_cp_offline, solve_dcm_offline, solve_ep_offline, OfflineOptions};
use crate::online::{chase, dcmon, gcsr};

use super::config::Algorithm;

/// Runs one algorithm. Generator-only algorithms (`ofa`, `chase`) keep the
/// static server fleet; server-only ones (`cpoff`, `gcsr`) buy all energy
/// from the grid.
pub fn solve(inst: &Instance, algo: Algorithm, window: usize, opts: &OfflineOptions) -> Result<(Schedule, CostBreakdown)> {
    let schedule = match algo {
        Algorithm::Offline => return solve_dcm_offline(inst, opts).map(|s| (s.schedule, s.cost)),
        Algorithm::Bruteforce => return brute_force_dcm(inst).map(|s| (s.schedule, s.cost)),
        Algorithm::Static => return static_benchmark(inst),
        Algorithm::Dcmon => dcmon(inst, window)?,
        Algorithm::Cpoff => Schedule::grid_only(inst, solve_cp_offline(inst)),
        Algorithm::Gcsr => Schedule::grid_only(inst, gcsr(inst, window)?),
        Algorithm::Ofa | Algorithm::Chase => {
            let x = vec![inst.max_servers(); inst.horizon()];
            let demand = inst.demand_series(&x);
            let y = if algo == Algorithm::Ofa {
                solve_ep_offline(&demand, inst.price(), inst.generator())
            } else {
                chase(&demand, inst.price(), inst.generator(), window)
            };
            Schedule::dispatched(inst, x, y)
        }
    };
    let cost = evaluate(inst, &schedule)?;
    Ok((schedule, cost))
}
