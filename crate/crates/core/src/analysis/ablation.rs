//! One-lever variants: generators without server scaling, and server
//! scaling without generators.

use crate::error::Result;
use crate::model::{evaluate, CostBreakdown, Instance, Schedule};
use crate::offline::{solve_cp_offline, solve_ep_offline};
use crate::online::{chase, gcsr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AblationMode {
    Offline,
    Online { lookahead: usize },
}

/// Static server fleet; generators scheduled on the demand it induces.
pub fn ablation_ep_only(inst: &Instance, mode: AblationMode) -> Result<CostBreakdown> {
    let x = vec![inst.max_servers(); inst.horizon()];
    let demand = inst.demand_series(&x);
    let y = match mode {
        AblationMode::Offline => solve_ep_offline(&demand, inst.price(), inst.generator()),
        AblationMode::Online { lookahead } => chase(&demand, inst.price(), inst.generator(), lookahead),
    };
    evaluate(inst, &Schedule::dispatched(inst, x, y))
}

/// Scaled server fleet, grid-only supply.
pub fn ablation_cp_only(inst: &Instance, mode: AblationMode) -> Result<CostBreakdown> {
    let x = match mode {
        AblationMode::Offline => solve_cp_offline(inst),
        AblationMode::Online { lookahead } => gcsr(inst, lookahead)?,
    };
    evaluate(inst, &Schedule::grid_only(inst, x))
}
