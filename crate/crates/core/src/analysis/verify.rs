//! Randomized self-checks: solver agreement with exhaustive search, the
//! online guarantees, switching structure and causality.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::model::{cp_cost, dcm_cost, dispatch, ep_cost, psi, turn_ons, GeneratorModel};
use crate::offline::{
    brute_force_cp, brute_force_dcm, brute_force_ep, cpoff_slice, ofa_ep_slice, slice_demand, slice_energy,
    slice_workload, solve_cp_offline, solve_dcm_offline, solve_ep_offline, OfflineOptions, PathMethod,
};
use crate::online::{
    a_priori_break_even, alpha_s, chase, chase_slice, dcmon, ep_window, gcsr, gcsr_slice, ratio_bound_chase,
    ratio_bound_hybrid, ratio_bound_ongrid, HybridBoundParams,
};

use super::benchmark::ratio;
use super::suite::{random_demand, random_instance, SuiteSpec};

/// Look-ahead windows exercised by the online checks.
pub const WINDOWS: [usize; 5] = [0, 1, 2, 4, 8];

const COST_TOL: f64 = 1e-9;
const RATIO_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &str) -> Self {
        CheckResult { name: name.into(), cases: 0, failures: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.failures.len() < 20 {
            self.failures.push(msg);
        }
    }
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= COST_TOL * a.abs().max(b.abs()).max(1.0)
}

/// Exact solver, Dijkstra variant and exhaustive search agree on cost.
pub fn check_offline_oracle<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("offline optimum matches exhaustive search");
    let layered = OfflineOptions::default();
    let dijkstra = OfflineOptions { method: PathMethod::Dijkstra, ..layered };
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::TINY);
        let bf = brute_force_dcm(&inst)?;
        let dp = solve_dcm_offline(&inst, &layered)?;
        let dj = solve_dcm_offline(&inst, &dijkstra)?;
        c.cases += 1;
        if !close(dp.cost.total, bf.cost.total) {
            c.fail(format!("case {k}: layered {} vs exhaustive {}", dp.cost.total, bf.cost.total));
        }
        if !close(dj.cost.total, dp.cost.total) {
            c.fail(format!("case {k}: dijkstra {} vs layered {}", dj.cost.total, dp.cost.total));
        }
        let via_psi = dcm_cost(&inst, &dp.schedule.x, &dp.schedule.y);
        if !close(via_psi, dp.cost.total) {
            c.fail(format!("case {k}: evaluated {} vs psi sum {}", dp.cost.total, via_psi));
        }
    }
    Ok(c)
}

/// Slice-wise server and generator plans match exhaustive search.
pub fn check_decomposition<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("slice algorithms match exhaustive search");
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::TINY);
        let (_, best_cp) = brute_force_cp(&inst)?;
        let cp = cp_cost(&inst, &solve_cp_offline(&inst));
        c.cases += 1;
        if !close(cp, best_cp) {
            c.fail(format!("case {k}: server plan {cp} vs exhaustive {best_cp}"));
        }
        let gen = *inst.generator();
        let demand = random_demand(rng, inst.horizon(), &gen);
        let (_, best_ep) = brute_force_ep(&demand, inst.price(), &gen)?;
        let ep = ep_cost(&demand, inst.price(), &gen, &solve_ep_offline(&demand, inst.price(), &gen));
        c.cases += 1;
        if !close(ep, best_ep) {
            c.fail(format!("case {k}: generator plan {ep} vs exhaustive {best_ep}"));
        }
    }
    Ok(c)
}

/// The dispatch rule beats every split on a 1001-point grid and prices at `psi`.
pub fn check_dispatch<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("dispatch is optimal");
    for k in 0..count {
        let capacity = rng.random_range(0.5..100.0);
        let c_o = rng.random_range(0.0..0.3);
        let gen = GeneratorModel::new(capacity, c_o, rng.random_range(0.0..3.0), 1.0, 10)?;
        let y = rng.random_range(0..=gen.count);
        let p = if rng.random_bool(0.1) { c_o } else { rng.random_range(0.0..0.5) };
        let g = rng.random_range(0.0..1.5) * capacity * f64::from(y.max(1));
        let (u, v) = dispatch(y, p, g, &gen);
        let cost = |u: f64, v: f64| p * v + gen.c_o * u + gen.c_m * f64::from(y);
        let best = cost(u, v);
        c.cases += 1;
        if !close(best, psi(y, p, g, &gen)) {
            c.fail(format!("case {k}: dispatch cost {best} vs psi {}", psi(y, p, g, &gen)));
        }
        let cap = capacity * f64::from(y);
        for j in 0..=1000 {
            let uu = cap * j as f64 / 1000.0;
            let vv = (g - uu).max(0.0);
            if cost(uu, vv) < best - COST_TOL {
                c.fail(format!("case {k}: split u = {uu} costs {} below dispatch {best}", cost(uu, vv)));
                break;
            }
        }
    }
    Ok(c)
}

/// Online server control stays within `2 - alpha_s` of the offline plan and
/// matches it once the window covers the break-even length.
pub fn check_gcsr_bound<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("online server ratio within bound");
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::SMALL);
        let off = cp_cost(&inst, &solve_cp_offline(&inst));
        let (d_min, p_min, beta_s) = (inst.d_min_trace(), inst.price_floor(), inst.beta_s());
        for w in WINDOWS {
            let on = cp_cost(&inst, &gcsr(&inst, w)?);
            let r = ratio(on, off);
            let bound = ratio_bound_ongrid(w, beta_s, d_min, p_min);
            c.cases += 1;
            if r > bound + RATIO_TOL {
                c.fail(format!("case {k}, w = {w}: ratio {r} above {bound}"));
            }
            if alpha_s(w, beta_s, d_min, p_min) >= 1.0 && !close(on, off) {
                c.fail(format!("case {k}, w = {w}: saturated window but online {on} vs offline {off}"));
            }
        }
    }
    Ok(c)
}

/// Generator and joint online control stay within their bounds.
pub fn check_online_bounds<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("online generator and joint ratios within bounds");
    let opts = OfflineOptions::default();
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::SMALL);
        let gen = *inst.generator();
        if gen.count == 0 {
            continue;
        }
        let p_max = inst.price_cap();
        let demand = inst.demand_series(&solve_cp_offline(&inst));
        let ofa = ep_cost(&demand, inst.price(), &gen, &solve_ep_offline(&demand, inst.price(), &gen));
        let opt = solve_dcm_offline(&inst, &opts)?.cost.total;
        let hb = HybridBoundParams {
            beta_s: inst.beta_s(),
            d_min: inst.d_min_model(),
            p_min: inst.price_floor(),
            p_max,
            gen,
        };
        for w in WINDOWS {
            let ch = ep_cost(&demand, inst.price(), &gen, &chase(&demand, inst.price(), &gen, w));
            let r = ratio(ch, ofa);
            let bound = ratio_bound_chase(w, p_max, &gen)?;
            c.cases += 1;
            if r > bound + RATIO_TOL {
                c.fail(format!("case {k}, w = {w}: generator ratio {r} above {bound}"));
            }
            let s = dcmon(&inst, w)?;
            let r = ratio(dcm_cost(&inst, &s.x, &s.y), opt);
            let bound = ratio_bound_hybrid(w, &hb)?;
            c.cases += 1;
            if r > bound + RATIO_TOL {
                c.fail(format!("case {k}, w = {w}: joint ratio {r} above {bound}"));
            }
        }
    }
    Ok(c)
}

/// Per slice, online and offline plans turn on equally often, and the online
/// server plan is on whenever the offline one is.
pub fn check_switching<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("switch counts equal and online dominates");
    let count_on = |s: &[bool]| turn_ons(&s.iter().map(|&b| u32::from(b)).collect::<Vec<_>>());
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::SMALL);
        let gen = *inst.generator();
        for w in WINDOWS {
            let fleet = gcsr(&inst, w)?;
            let mut summed = vec![0u32; inst.horizon()];
            for i in 1..=inst.max_servers() {
                let a_i = slice_workload(inst.workload(), i);
                let d_i = slice_demand(&inst, i);
                let off = cpoff_slice(&a_i, inst.price(), &d_i, inst.beta_s());
                let on = gcsr_slice(&a_i, inst.price(), &d_i, inst.beta_s(), w);
                c.cases += 1;
                if count_on(&on) != count_on(&off) {
                    c.fail(format!("case {k}, w = {w}, server {i}: turn-ons {} vs {}", count_on(&on), count_on(&off)));
                }
                if on.iter().zip(&off).any(|(&n, &f)| f && !n) {
                    c.fail(format!("case {k}, w = {w}, server {i}: online off while offline on"));
                }
                for (s, b) in summed.iter_mut().zip(&on) {
                    *s += u32::from(*b);
                }
                if i > 1 {
                    let prev = gcsr_slice(&slice_workload(inst.workload(), i - 1), inst.price(), &slice_demand(&inst, i - 1), inst.beta_s(), w);
                    if on.iter().zip(&prev).any(|(&hi, &lo)| hi && !lo) {
                        c.fail(format!("case {k}, w = {w}, server {i}: slices not nested"));
                    }
                }
            }
            if summed != fleet {
                c.fail(format!("case {k}, w = {w}: fleet {fleet:?} vs slice sum {summed:?}"));
            }
            let demand = inst.demand_series(&solve_cp_offline(&inst));
            for i in 1..=gen.count {
                let e_i = slice_energy(&demand, i, gen.capacity);
                let off = ofa_ep_slice(&e_i, inst.price(), &gen);
                let on = chase_slice(&e_i, inst.price(), &gen, w);
                c.cases += 1;
                if count_on(&on) != count_on(&off) {
                    c.fail(format!(
                        "case {k}, w = {w}, generator {i}: turn-ons {} vs {}",
                        count_on(&on),
                        count_on(&off)
                    ));
                }
            }
        }
    }
    Ok(c)
}

/// Decisions at slot `t` survive cutting the input at `t + w`.
pub fn check_causality<R: Rng>(rng: &mut R, count: usize) -> Result<CheckResult> {
    let mut c = CheckResult::new("online decisions are causal");
    for k in 0..count {
        let inst = random_instance(rng, &SuiteSpec::SMALL);
        let gen = *inst.generator();
        let delta = a_priori_break_even(&inst);
        for w in WINDOWS {
            let x = gcsr(&inst, w)?;
            let joint = dcmon(&inst, w)?;
            let demand = inst.demand_series(&x);
            let y = chase(&demand, inst.price(), &gen, w);
            let ep_w = ep_window(w, delta);
            for t in 0..inst.horizon() {
                let cut = inst.truncated(t + w + 1);
                c.cases += 1;
                if gcsr(&cut, w)?[t] != x[t] {
                    c.fail(format!("case {k}, w = {w}: server decision at {t} changed"));
                }
                let cj = dcmon(&cut, w)?;
                if cj.x[t] != joint.x[t] || cj.y[t] != joint.y[t] {
                    c.fail(format!("case {k}, w = {w}: joint decision at {t} changed"));
                }
                let end = (t + w + 1).min(inst.horizon());
                if chase(&demand[..end], &inst.price()[..end], &gen, w)[t] != y[t] {
                    c.fail(format!("case {k}, w = {w}: generator decision at {t} changed"));
                }
            }
            // the joint plan's generator side sees exactly the server plan's demand
            if joint.x != x || joint.y != chase(&demand, inst.price(), &gen, ep_w) {
                c.fail(format!("case {k}, w = {w}: joint plan differs from its parts"));
            }
        }
    }
    Ok(c)
}

/// Runs every check with `count` random instances each.
pub fn run_verify(seed: u64, count: usize) -> Result<Vec<CheckResult>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(vec![
        check_offline_oracle(&mut rng, count)?,
        check_decomposition(&mut rng, count)?,
        check_dispatch(&mut rng, count)?,
        check_gcsr_bound(&mut rng, count)?,
        check_online_bounds(&mut rng, count)?,
        check_switching(&mut rng, count)?,
        check_causality(&mut rng, count)?,
    ])
}
