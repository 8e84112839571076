use crate::error::Result;
use crate::model::{evaluate, CostBreakdown, Instance, Schedule};

/// Peak provisioning: `M` servers on for the whole horizon, all energy from
/// the grid, one fleet turn-on at the first slot.
pub fn static_benchmark(inst: &Instance) -> Result<(Schedule, CostBreakdown)> {
    let x = vec![inst.max_servers(); inst.horizon()];
    let schedule = Schedule::grid_only(inst, x);
    let cost = evaluate(inst, &schedule)?;
    Ok((schedule, cost))
}

/// `1 - cost / baseline`, zero when the baseline costs nothing.
pub fn reduction(cost: f64, baseline: f64) -> f64 {
    if baseline > 0.0 {
        1.0 - cost / baseline
    } else {
        0.0
    }
}

/// `cost / reference`, one when both are zero.
pub fn ratio(cost: f64, reference: f64) -> f64 {
    if reference > 0.0 {
        cost / reference
    } else if cost > 0.0 {
        f64::INFINITY
    } else {
        1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{GeneratorModel, PowerModel, ServerModel};

    #[test]
    fn one_turn_on_and_grid_only() {
        let pm = PowerModel::servers_only(ServerModel::new(1.0, 2.0, 0.5).unwrap()).unwrap();
        let inst = Instance::new(vec![0.5, 2.5, 0.0], vec![0.1, 0.2, 0.3], pm, GeneratorModel::none()).unwrap();
        let (s, c) = static_benchmark(&inst).unwrap();
        assert_eq!(s.x, vec![3, 3, 3]);
        assert_eq!(c.server_switching, 1.5);
        assert_eq!(c.onsite_fuel, 0.0);
        // demands 3.5, 5.5, 3.0
        assert!((c.grid - (0.35 + 1.1 + 0.9)).abs() < 1e-12);
    }
}
