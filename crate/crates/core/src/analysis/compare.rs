use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{evaluate, CostBreakdown, Instance, Schedule};
use crate::offline::{solve_cp_offline, solve_dcm_offline, solve_decomposed, OfflineOptions, OfflineSolution};
use crate::online::{
    a_priori_break_even, dcmon, gcsr, ratio_bound_hybrid, ratio_bound_ongrid, rho, HybridBoundParams,
};

use super::benchmark::{ratio, reduction, static_benchmark};

pub const REPORT_SCHEMA: &str = "dcmkit-report/1";

/// Label of the joint optimum when it fits the state budget.
pub const JOINT_OPTIMAL: &str = "joint-optimal";
/// Label of the fallback reference: offline server plan, then offline generator plan.
pub const DECOMPOSED: &str = "decomposed-offline";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSummary {
    pub horizon: usize,
    pub max_servers: u32,
    pub generators: u32,
    pub price_floor: f64,
    pub price_cap: f64,
    pub d_min_trace: f64,
    pub d_min_model: f64,
    /// Break-even idle length used by the joint online algorithm; absent when infinite.
    pub break_even_slots: Option<f64>,
}

impl InstanceSummary {
    pub fn of(inst: &Instance) -> Self {
        let be = a_priori_break_even(inst);
        InstanceSummary {
            horizon: inst.horizon(),
            max_servers: inst.max_servers(),
            generators: inst.generator().count,
            price_floor: inst.price_floor(),
            price_cap: inst.price_cap(),
            d_min_trace: inst.d_min_trace(),
            d_min_model: inst.d_min_model(),
            break_even_slots: be.is_finite().then_some(be),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgorithmResult {
    pub name: String,
    pub cost: CostBreakdown,
    /// Saving relative to the static benchmark.
    pub reduction: f64,
}

impl AlgorithmResult {
    pub fn new(name: impl Into<String>, cost: CostBreakdown, baseline: f64) -> Self {
        AlgorithmResult { name: name.into(), cost, reduction: reduction(cost.total, baseline) }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RatioCheck {
    pub algorithm: String,
    pub reference: String,
    pub ratio: f64,
    pub bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub value: f64,
    pub results: Vec<AlgorithmResult>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepTable {
    pub axis: String,
    pub points: Vec<SweepPoint>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub schema: String,
    pub instance: InstanceSummary,
    pub lookahead: usize,
    pub reference: String,
    pub algorithms: Vec<AlgorithmResult>,
    pub ratios: Vec<RatioCheck>,
    pub sweeps: Vec<SweepTable>,
}

impl ExperimentReport {
    pub fn algorithm(&self, name: &str) -> Option<&AlgorithmResult> {
        self.algorithms.iter().find(|a| a.name == name)
    }
}

/// Joint optimum when it fits the budget, otherwise the decomposed plan.
pub fn offline_reference(inst: &Instance, opts: &OfflineOptions) -> Result<(OfflineSolution, &'static str)> {
    match solve_dcm_offline(inst, opts) {
        Ok(s) => Ok((s, JOINT_OPTIMAL)),
        Err(e) if e.is_capacity() => Ok((solve_decomposed(inst)?, DECOMPOSED)),
        Err(e) => Err(e),
    }
}

fn grid_cost(inst: &Instance, x: Vec<u32>) -> Result<CostBreakdown> {
    evaluate(inst, &Schedule::grid_only(inst, x))
}

/// Runs the benchmark, the offline references and the online algorithms.
pub fn run_comparison(inst: &Instance, window: usize, opts: &OfflineOptions) -> Result<ExperimentReport> {
    let (_, stat) = static_benchmark(inst)?;
    let base = stat.total;
    let joint = match solve_dcm_offline(inst, opts) {
        Ok(s) => Some(s),
        Err(e) if e.is_capacity() => None,
        Err(e) => return Err(e),
    };
    let decomposed = solve_decomposed(inst)?;
    let cpoff = grid_cost(inst, solve_cp_offline(inst))?;
    let online_grid = grid_cost(inst, gcsr(inst, window)?)?;
    let hybrid = evaluate(inst, &dcmon(inst, window)?)?;

    let mut algorithms = vec![AlgorithmResult::new("static", stat, base)];
    if let Some(j) = &joint {
        algorithms.push(AlgorithmResult::new("offline", j.cost, base));
    }
    algorithms.push(AlgorithmResult::new("decomposed", decomposed.cost, base));
    algorithms.push(AlgorithmResult::new("cpoff", cpoff, base));
    algorithms.push(AlgorithmResult::new("gcsr", online_grid, base));
    algorithms.push(AlgorithmResult::new("dcmon", hybrid, base));

    let gen = *inst.generator();
    let mut ratios = vec![RatioCheck {
        algorithm: "gcsr".into(),
        reference: "cpoff".into(),
        ratio: ratio(online_grid.total, cpoff.total),
        bound: Some(ratio_bound_ongrid(window, inst.beta_s(), inst.d_min_trace(), inst.price_floor())),
    }];
    let economics_hold = gen.count > 0 && gen.full_load_unit_cost() < inst.price_cap();
    let (reference, ref_total) = match &joint {
        Some(j) => (JOINT_OPTIMAL, j.cost.total),
        None => (DECOMPOSED, decomposed.cost.total),
    };
    let hybrid_bound = if joint.is_some() && economics_hold {
        let hb = HybridBoundParams {
            beta_s: inst.beta_s(),
            d_min: inst.d_min_model(),
            p_min: inst.price_floor(),
            p_max: inst.price_cap(),
            gen,
        };
        Some(ratio_bound_hybrid(window, &hb)?)
    } else {
        None
    };
    ratios.push(RatioCheck {
        algorithm: "dcmon".into(),
        reference: reference.into(),
        ratio: ratio(hybrid.total, ref_total),
        bound: hybrid_bound,
    });
    if let Some(j) = &joint {
        ratios.push(RatioCheck {
            algorithm: "decomposed".into(),
            reference: JOINT_OPTIMAL.into(),
            ratio: ratio(decomposed.cost.total, j.cost.total),
            bound: if economics_hold { Some(rho(inst.price_cap(), &gen)?) } else { None },
        });
    }

    Ok(ExperimentReport {
        schema: REPORT_SCHEMA.into(),
        instance: InstanceSummary::of(inst),
        lookahead: window,
        reference: reference.into(),
        algorithms,
        ratios,
        sweeps: Vec::new(),
    })
}
