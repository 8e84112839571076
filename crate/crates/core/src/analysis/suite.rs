//! Random instances for property and verification suites.

use rand::Rng;

use crate::model::{
    ConditioningModel, CoolingModel, CoolingRegime, Curve, GeneratorModel, Instance, PowerModel, ServerModel,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteSpec {
    pub max_horizon: usize,
    pub max_servers: u32,
    pub max_generators: u32,
    /// Range of break-even idle lengths to draw `beta_s` from.
    pub break_even: (f64, f64),
}

impl SuiteSpec {
    /// Small enough for exhaustive search.
    pub const TINY: SuiteSpec = SuiteSpec { max_horizon: 6, max_servers: 3, max_generators: 2, break_even: (0.3, 6.0) };
    /// Small enough for the exact solver and repeated truncated replays.
    pub const SMALL: SuiteSpec =
        SuiteSpec { max_horizon: 24, max_servers: 5, max_generators: 3, break_even: (0.3, 12.0) };
}

fn random_cooling<R: Rng>(rng: &mut R) -> CoolingModel {
    let b_max = rng.random_range(0.5..3.0);
    match rng.random_range(0..3) {
        0 => CoolingModel::none(),
        1 => {
            let period = rng.random_range(1..=3usize);
            let split = rng.random_range(1..=period);
            let mut regimes = Vec::new();
            for (k, hours) in [0..split, split..period].into_iter().enumerate() {
                if hours.is_empty() {
                    continue;
                }
                let curve = Curve::Quadratic {
                    q: rng.random_range(0.0..0.5),
                    l: rng.random_range(0.0..0.5),
                    c: rng.random_range(0.0..0.2),
                };
                regimes.push(CoolingRegime { name: format!("r{k}"), hours, curve });
            }
            CoolingModel::new(b_max, period, regimes).expect("valid random cooling")
        }
        _ => CoolingModel::new(
            b_max,
            1,
            vec![CoolingRegime { name: "r0".into(), hours: 0..1, curve: Curve::Cubic { k: rng.random_range(0.0..0.5) } }],
        )
        .expect("valid random cooling"),
    }
}

fn random_workload<R: Rng>(rng: &mut R, t_len: usize, m: u32) -> Vec<f64> {
    (0..t_len)
        .map(|_| match rng.random_range(0..4) {
            0 => 0.0,
            1 => f64::from(rng.random_range(1..=m)),
            _ => rng.random_range(0.0..f64::from(m)),
        })
        .collect()
}

/// A random valid instance. Prices sometimes sit exactly at the fuel cost and
/// `beta_s` is drawn so that break-even lengths land in `spec.break_even`.
pub fn random_instance<R: Rng>(rng: &mut R, spec: &SuiteSpec) -> Instance {
    let t_len = rng.random_range(1..=spec.max_horizon);
    let m = rng.random_range(1..=spec.max_servers);
    let workload = random_workload(rng, t_len, m);
    let c_idle = if rng.random_bool(0.1) { 0.0 } else { rng.random_range(0.05..1.0) };
    let c_peak = c_idle + rng.random_range(0.0..1.0);
    let cooling = random_cooling(rng);
    let conditioning = if rng.random_bool(0.5) {
        ConditioningModel::None
    } else {
        ConditioningModel::quadratic(
            rng.random_range(0.5..3.0),
            rng.random_range(0.0..0.3),
            rng.random_range(0.0..0.3),
            rng.random_range(0.0..0.1),
        )
        .expect("valid random conditioning")
    };

    let mut price: Vec<f64> = (0..t_len).map(|_| rng.random_range(0.01..0.5)).collect();
    let p_max = price.iter().copied().fold(0.0, f64::max);
    let count = rng.random_range(0..=spec.max_generators);
    let capacity = rng.random_range(0.3..3.0);
    let c_o = rng.random_range(0.0..0.8) * p_max;
    let c_m = rng.random_range(0.0..0.9) * (p_max - c_o) * capacity;
    let beta_g = if rng.random_bool(0.1) { 0.0 } else { rng.random_range(0.01..2.0) };
    let peak = price.iter().position(|&p| p == p_max).unwrap_or(0);
    for (t, p) in price.iter_mut().enumerate() {
        if t != peak && rng.random_bool(0.1) {
            *p = c_o.max(0.01);
        }
    }
    let gen = GeneratorModel::new(capacity, c_o, c_m, beta_g, count).expect("valid random generator");

    let server = ServerModel::new(c_idle, c_peak, 0.0).expect("valid random server");
    let power = PowerModel::new(server, cooling, conditioning).expect("valid random power model");
    let inst = Instance::new(workload, price, power, gen).expect("valid random instance");
    let unit = inst.d_min_trace() * inst.price_floor();
    let beta_s = if rng.random_bool(0.05) {
        0.0
    } else if unit > 0.0 {
        unit * rng.random_range(spec.break_even.0..spec.break_even.1)
    } else {
        rng.random_range(0.01..1.0)
    };
    inst.with_beta_s(beta_s).expect("valid random beta_s")
}

/// A random energy series for a generator fleet, sometimes beyond its capacity.
pub fn random_demand<R: Rng>(rng: &mut R, t_len: usize, gen: &GeneratorModel) -> Vec<f64> {
    let top = (f64::from(gen.count) + 0.5) * gen.capacity;
    (0..t_len).map(|_| if rng.random_bool(0.2) { 0.0 } else { rng.random_range(0.0..top.max(0.1)) }).collect()
}
