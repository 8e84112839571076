use crate::model::Instance;

use super::break_even_reached;
use super::slices::{slice_demand, slice_workload};

/// Optimal on/off schedule of one server slice.
///
/// Off before the first and after the last busy slot; on while busy; an idle
/// stretch between busy slots is spent off only if idling it would cost at
/// least `beta_s`.
pub fn cpoff_slice(a_i: &[f64], price: &[f64], d_i: &[f64], beta_s: f64) -> Vec<bool> {
    let n = a_i.len();
    let mut on = vec![false; n];
    let Some(first) = a_i.iter().position(|&a| a > 0.0) else {
        return on;
    };
    let last = a_i.iter().rposition(|&a| a > 0.0).unwrap_or(first);
    let mut t = first;
    while t <= last {
        if a_i[t] > 0.0 {
            on[t] = true;
            t += 1;
            continue;
        }
        let start = t;
        let mut idle = 0.0;
        while a_i[t] <= 0.0 {
            idle += price[t] * d_i[t];
            t += 1;
        }
        if !break_even_reached(idle, beta_s) {
            on[start..t].iter_mut().for_each(|s| *s = true);
        }
    }
    on
}

/// Optimal grid-only server schedule, built slice by slice.
pub fn solve_cp_offline(inst: &Instance) -> Vec<u32> {
    let mut x = vec![0u32; inst.horizon()];
    for i in 1..=inst.max_servers() {
        let a_i = slice_workload(inst.workload(), i);
        let d_i = slice_demand(inst, i);
        for (xt, on) in x.iter_mut().zip(cpoff_slice(&a_i, inst.price(), &d_i, inst.beta_s())) {
            *xt += u32::from(on);
        }
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_rules() {
        let a = [0.0, 0.5, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.3, 0.0];
        let p = [1.0; 10];
        let d = [0.1; 10];
        // gap of two costs 0.2 < 0.25: stay on; gap of three costs 0.3: turn off
        let on = cpoff_slice(&a, &p, &d, 0.25);
        let expect = [false, true, true, true, true, false, false, false, true, false];
        assert_eq!(on, expect);
    }

    #[test]
    fn tie_turns_off() {
        let a = [1.0, 0.0, 0.0, 1.0];
        let p = [0.5; 4];
        let d = [0.25; 4];
        assert_eq!(cpoff_slice(&a, &p, &d, 0.25), [true, false, false, true]);
    }

    #[test]
    fn idle_slice_stays_off() {
        assert_eq!(cpoff_slice(&[0.0; 3], &[1.0; 3], &[1.0; 3], 0.0), [false; 3]);
    }
}
