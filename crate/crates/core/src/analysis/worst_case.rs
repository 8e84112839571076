//! Hand-built inputs on which the guarantees are (nearly) attained.

use crate::error::Result;
use crate::model::{GeneratorModel, Instance, PowerModel, ServerModel};

/// Instance family where the decomposed plan costs close to `rho` times the
/// joint optimum.
///
/// One server drawing exactly one generator's capacity works one slot in
/// every seven. Idling through each six-slot gap costs exactly the restart
/// cost, so the server plan turns off, and a lone busy slot never repays a
/// generator startup. The joint plan keeps both running throughout. The
/// ratio approaches `rho = 2` as `periods` grows.
pub fn rho_tightness_instance(periods: usize) -> Result<Instance> {
    const GAP: usize = 6;
    let load = 60.0;
    let p_max = 0.2;
    let beta_s = GAP as f64 * load * p_max;
    let server = ServerModel::new(load, load, beta_s)?;
    let gen = GeneratorModel::new(load, 0.08, 1.2, 24.0, 1)?;
    let t_len = 1 + periods.saturating_sub(1) * (GAP + 1);
    let workload: Vec<f64> = (0..t_len).map(|t| if t % (GAP + 1) == 0 { 1.0 } else { 0.0 }).collect();
    Instance::new(workload, vec![p_max; t_len], PowerModel::servers_only(server)?, gen)
}

/// Exact decomposed-to-joint cost ratio of [`rho_tightness_instance`].
pub fn rho_tightness_ratio(periods: usize) -> f64 {
    if periods < 2 {
        // a single busy slot never repays a generator
        return 1.0;
    }
    let k = periods as f64;
    // decomposed: K busy slots at 12 plus K restarts at 72;
    // joint: 6 per slot over 7K - 6 slots plus one startup of each kind.
    (84.0 * k) / (42.0 * k + 60.0)
}

/// Gap length relative to the break-even length `delta`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GapCase {
    /// One slot short of break-even: idling is optimal.
    Short,
    /// Exactly break-even: turning off ties with idling.
    Boundary,
    /// Twice break-even: turning off is strictly better.
    Long,
}

impl GapCase {
    pub fn length(self, delta: usize) -> usize {
        match self {
            GapCase::Short => delta.saturating_sub(1),
            GapCase::Boundary => delta,
            GapCase::Long => 2 * delta,
        }
    }
}

/// One server that works one slot, then idles `gap` slots, `periods` times,
/// ending on a busy slot. Idle cost per slot is `1/8`, and `beta_s` is
/// `delta` idle slots.
pub fn gcsr_gap_instance(delta: usize, gap: usize, periods: usize) -> Result<Instance> {
    let server = ServerModel::new(0.5, 0.5, delta as f64 * 0.125)?;
    let mut workload = Vec::with_capacity(periods * (gap + 1) + 1);
    for _ in 0..periods {
        workload.push(1.0);
        workload.extend(std::iter::repeat_n(0.0, gap));
    }
    workload.push(1.0);
    let t_len = workload.len();
    Instance::new(workload, vec![0.25; t_len], PowerModel::servers_only(server)?, GeneratorModel::none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tightness_shape() {
        let inst = rho_tightness_instance(3).unwrap();
        assert_eq!(inst.horizon(), 15);
        assert_eq!(inst.workload()[7], 1.0);
        assert_eq!(inst.workload()[14], 1.0);
        assert_eq!(inst.beta_s(), 72.0);
        assert_eq!(inst.marginal_demand(3, 1), 60.0);
    }

    #[test]
    fn gap_shape() {
        let inst = gcsr_gap_instance(4, GapCase::Long.length(4), 2).unwrap();
        assert_eq!(inst.horizon(), 19);
        assert_eq!(inst.beta_s(), 0.5);
    }
}
