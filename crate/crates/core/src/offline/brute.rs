//! Exhaustive enumeration, used as a reference on tiny instances.

use crate::error::{Error, Result};
use crate::model::{evaluate, psi, GeneratorModel, Instance, Schedule};

use super::dp::OfflineSolution;

/// Largest search space the oracles will walk.
pub const BRUTE_FORCE_BUDGET: f64 = 1e7;

fn check_budget(leaves: f64) -> Result<()> {
    if leaves > BRUTE_FORCE_BUDGET {
        return Err(Error::EnumerationBudget { leaves, budget: BRUTE_FORCE_BUDGET });
    }
    Ok(())
}

fn better(cost: f64, best: f64) -> bool {
    best.is_infinite() || cost < best - 1e-12 * best.abs().max(1.0)
}

/// Walks every series `s` with `lo[t] <= s[t] <= hi` in lexicographic order.
/// `step(t, prev, cur)` is the cost of choosing `cur` at slot `t` after `prev`.
fn enumerate<F>(lo: &[u32], hi: u32, step: &F, mut leaf: impl FnMut(&[u32], f64))
where
    F: Fn(usize, u32, u32) -> f64,
{
    #[allow(clippy::too_many_arguments)]
    fn go<F: Fn(usize, u32, u32) -> f64>(
        t: usize,
        prev: u32,
        acc: f64,
        lo: &[u32],
        hi: u32,
        cur: &mut Vec<u32>,
        step: &F,
        leaf: &mut dyn FnMut(&[u32], f64),
    ) {
        if t == lo.len() {
            leaf(cur, acc);
            return;
        }
        for s in lo[t]..=hi {
            cur.push(s);
            go(t + 1, s, acc + step(t, prev, s), lo, hi, cur, step, leaf);
            cur.pop();
        }
    }
    let mut cur = Vec::with_capacity(lo.len());
    go(0, 0, 0.0, lo, hi, &mut cur, step, &mut leaf);
}

/// Joint optimum by trying every `(x, y)`. Ties go to the lexicographically
/// smallest `x` series, then `y` series.
pub fn brute_force_dcm(inst: &Instance) -> Result<OfflineSolution> {
    let t_len = inst.horizon();
    let m = inst.max_servers();
    let n = inst.generator().count;
    check_budget((f64::from(m) + 1.0).powi(t_len as i32) * (f64::from(n) + 1.0).powi(t_len as i32))?;
    let gen = *inst.generator();
    let beta_s = inst.beta_s();
    let lo_x: Vec<u32> = (0..t_len).map(|t| inst.required_servers(t)).collect();
    let lo_y = vec![0u32; t_len];

    let mut best_cost = f64::INFINITY;
    let mut best: (Vec<u32>, Vec<u32>) = (Vec::new(), Vec::new());
    let x_step = |_t: usize, prev: u32, cur: u32| beta_s * f64::from(cur.saturating_sub(prev));
    enumerate(&lo_x, m, &x_step, |x, x_cost| {
        let demand: Vec<f64> = x.iter().enumerate().map(|(t, &xt)| inst.demand(t, xt)).collect();
        let y_step = |t: usize, prev: u32, cur: u32| {
            gen.beta_g * f64::from(cur.saturating_sub(prev)) + psi(cur, inst.price()[t], demand[t], &gen)
        };
        enumerate(&lo_y, n, &y_step, |y, y_cost| {
            let c = x_cost + y_cost;
            if better(c, best_cost) {
                best_cost = c;
                best = (x.to_vec(), y.to_vec());
            }
        });
    });
    let schedule = Schedule::dispatched(inst, best.0, best.1);
    let cost = evaluate(inst, &schedule)?;
    Ok(OfflineSolution { schedule, cost })
}

/// Grid-only optimum by trying every server series.
pub fn brute_force_cp(inst: &Instance) -> Result<(Vec<u32>, f64)> {
    let t_len = inst.horizon();
    let m = inst.max_servers();
    check_budget((f64::from(m) + 1.0).powi(t_len as i32))?;
    let beta_s = inst.beta_s();
    let lo: Vec<u32> = (0..t_len).map(|t| inst.required_servers(t)).collect();
    let step = |t: usize, prev: u32, cur: u32| {
        beta_s * f64::from(cur.saturating_sub(prev)) + inst.price()[t] * inst.demand(t, cur)
    };
    let mut best = (Vec::new(), f64::INFINITY);
    enumerate(&lo, m, &step, |x, c| {
        if better(c, best.1) {
            best = (x.to_vec(), c);
        }
    });
    Ok(best)
}

/// Generator optimum for fixed demand by trying every generator series.
pub fn brute_force_ep(demand: &[f64], price: &[f64], gen: &GeneratorModel) -> Result<(Vec<u32>, f64)> {
    let t_len = demand.len();
    check_budget((f64::from(gen.count) + 1.0).powi(t_len as i32))?;
    let lo = vec![0u32; t_len];
    let step = |t: usize, prev: u32, cur: u32| {
        gen.beta_g * f64::from(cur.saturating_sub(prev)) + psi(cur, price[t], demand[t], gen)
    };
    let mut best = (Vec::new(), f64::INFINITY);
    enumerate(&lo, gen.count, &step, |y, c| {
        if better(c, best.1) {
            best = (y.to_vec(), c);
        }
    });
    Ok(best)
}
