use serde::{Deserialize, Serialize};

use crate::error::{Constraint, Error, Result};

use super::generator::{dispatch, psi, GeneratorModel};
use super::instance::Instance;

const FEAS_TOL: f64 = 1e-9;

/// Servers `x`, generators `y`, on-site output `u` and grid draw `v` per slot.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Schedule {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

impl Schedule {
    /// Fills `u` and `v` by the optimal dispatch rule.
    pub fn dispatched(inst: &Instance, x: Vec<u32>, y: Vec<u32>) -> Schedule {
        let gen = inst.generator();
        let (u, v) = x
            .iter()
            .zip(&y)
            .enumerate()
            .map(|(t, (&xt, &yt))| dispatch(yt, inst.price()[t], inst.demand(t, xt), gen))
            .unzip();
        Schedule { x, y, u, v }
    }

    /// Grid-only supply.
    pub fn grid_only(inst: &Instance, x: Vec<u32>) -> Schedule {
        let y = vec![0; x.len()];
        Self::dispatched(inst, x, y)
    }

    pub fn len(&self) -> usize {
        self.x.len()
    }

    pub fn is_empty(&self) -> bool {
        self.x.is_empty()
    }
}

/// Cost components of a schedule.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct CostBreakdown {
    pub grid: f64,
    pub onsite_fuel: f64,
    pub maintenance: f64,
    pub server_switching: f64,
    pub generator_startup: f64,
    pub total: f64,
}

impl CostBreakdown {
    pub const METRICS: [&'static str; 6] =
        ["grid", "onsite_fuel", "maintenance", "server_switching", "generator_startup", "total"];

    pub fn metric(&self, name: &str) -> Option<f64> {
        Some(match name {
            "grid" => self.grid,
            "onsite_fuel" => self.onsite_fuel,
            "maintenance" => self.maintenance,
            "server_switching" => self.server_switching,
            "generator_startup" => self.generator_startup,
            "total" => self.total,
            _ => return None,
        })
    }
}

/// `beta * sum_t [s(t) - s(t-1)]^+` with `s(-1) = 0`.
pub fn switching_cost(series: &[u32], beta: f64) -> f64 {
    beta * turn_ons(series) as f64
}

/// Number of unit turn-ons, `sum_t [s(t) - s(t-1)]^+`.
pub fn turn_ons(series: &[u32]) -> u64 {
    let mut prev = 0u32;
    let mut n = 0u64;
    for &s in series {
        n += u64::from(s.saturating_sub(prev));
        prev = s;
    }
    n
}

/// Checks every constraint and prices the schedule.
pub fn evaluate(inst: &Instance, s: &Schedule) -> Result<CostBreakdown> {
    let t_len = inst.horizon();
    if [s.x.len(), s.y.len(), s.u.len(), s.v.len()].iter().any(|&l| l != t_len) {
        let slot = s.x.len().min(s.y.len()).min(s.u.len()).min(s.v.len()).min(t_len);
        return Err(Error::Infeasible { slot, constraint: Constraint::Length });
    }
    let gen = inst.generator();
    let mut c = CostBreakdown::default();
    for t in 0..t_len {
        let fail = |constraint| Err(Error::Infeasible { slot: t, constraint });
        if s.x[t] < inst.required_servers(t) {
            return fail(Constraint::ServerCapacity);
        }
        if s.y[t] > gen.count {
            return fail(Constraint::GeneratorCount);
        }
        let (u, v) = (s.u[t], s.v[t]);
        if !(u.is_finite() && v.is_finite()) || u < -FEAS_TOL || v < -FEAS_TOL {
            return fail(Constraint::NonNegative);
        }
        if u > gen.capacity * f64::from(s.y[t]) + FEAS_TOL {
            return fail(Constraint::GeneratorCapacity);
        }
        if u + v < inst.demand(t, s.x[t]) - FEAS_TOL {
            return fail(Constraint::Balance);
        }
        c.grid += inst.price()[t] * v;
        c.onsite_fuel += gen.c_o * u;
        c.maintenance += gen.c_m * f64::from(s.y[t]);
    }
    c.server_switching = switching_cost(&s.x, inst.beta_s());
    c.generator_startup = switching_cost(&s.y, gen.beta_g);
    c.total = c.grid + c.onsite_fuel + c.maintenance + c.server_switching + c.generator_startup;
    Ok(c)
}

/// Joint objective of `(x, y)` with optimal dispatch, no feasibility check.
pub fn dcm_cost(inst: &Instance, x: &[u32], y: &[u32]) -> f64 {
    let gen = inst.generator();
    let run: f64 = (0..inst.horizon())
        .map(|t| psi(y[t], inst.price()[t], inst.demand(t, x[t]), gen))
        .sum();
    run + switching_cost(x, inst.beta_s()) + switching_cost(y, gen.beta_g)
}

/// Grid-only objective of a server schedule.
pub fn cp_cost(inst: &Instance, x: &[u32]) -> f64 {
    let run: f64 = (0..inst.horizon()).map(|t| inst.price()[t] * inst.demand(t, x[t])).sum();
    run + switching_cost(x, inst.beta_s())
}

/// Energy-provisioning objective of a generator schedule against fixed demand.
pub fn ep_cost(demand: &[f64], price: &[f64], gen: &GeneratorModel, y: &[u32]) -> f64 {
    let run: f64 = demand.iter().zip(price).zip(y).map(|((&e, &p), &yt)| psi(yt, p, e, gen)).sum();
    run + switching_cost(y, gen.beta_g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::power::{PowerModel, ServerModel};

    fn inst() -> Instance {
        let power = PowerModel::servers_only(ServerModel::new(1.0, 2.0, 0.5).unwrap()).unwrap();
        let gen = GeneratorModel::new(2.0, 0.1, 0.05, 0.3, 2).unwrap();
        Instance::new(vec![1.0, 0.5, 2.0], vec![0.2, 0.05, 0.3], power, gen).unwrap()
    }

    #[test]
    fn evaluate_matches_psi_sum() {
        let i = inst();
        let x = vec![1, 1, 2];
        let y = vec![1, 0, 2];
        let s = Schedule::dispatched(&i, x.clone(), y.clone());
        let c = evaluate(&i, &s).unwrap();
        assert!((c.total - dcm_cost(&i, &x, &y)).abs() < 1e-12);
        // x turns on 1 then 1 more; y turns on 1 then 2
        assert!((c.server_switching - 1.0).abs() < 1e-12);
        assert!((c.generator_startup - 0.9).abs() < 1e-12);
    }

    #[test]
    fn evaluate_flags_violations() {
        let i = inst();
        let mut s = Schedule::dispatched(&i, vec![1, 1, 2], vec![0, 0, 0]);
        s.x[2] = 1;
        assert!(matches!(
            evaluate(&i, &s),
            Err(Error::Infeasible { slot: 2, constraint: Constraint::ServerCapacity })
        ));
        let mut s = Schedule::dispatched(&i, vec![1, 1, 2], vec![0, 0, 0]);
        s.v[1] -= 0.01;
        assert!(matches!(evaluate(&i, &s), Err(Error::Infeasible { slot: 1, constraint: Constraint::Balance })));
        let s = Schedule::dispatched(&i, vec![1, 1, 2], vec![0, 3, 0]);
        assert!(matches!(
            evaluate(&i, &s),
            Err(Error::Infeasible { slot: 1, constraint: Constraint::GeneratorCount })
        ));
        let mut s = Schedule::dispatched(&i, vec![1, 1, 2], vec![1, 0, 0]);
        s.u[0] += 2.0;
        assert!(matches!(
            evaluate(&i, &s),
            Err(Error::Infeasible { slot: 0, constraint: Constraint::GeneratorCapacity })
        ));
    }

    #[test]
    fn turn_on_counting() {
        assert_eq!(turn_ons(&[0, 2, 1, 3, 3, 0, 1]), 5);
        assert_eq!(turn_ons(&[]), 0);
    }
}
