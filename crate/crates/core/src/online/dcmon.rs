//! Joint online control: the server fleet runs with the full look-ahead; the
//! generator fleet runs on the demand the server fleet will certainly induce.

use crate::error::Result;
use crate::model::{break_even_interval, Instance, Schedule};

use super::chase::ChaseFleet;
use super::gcsr::GcsrFleet;
use super::stream::LookaheadStream;

/// Break-even idle length known before the first slot: model `d_min` and the
/// declared price floor.
pub fn a_priori_break_even(inst: &Instance) -> f64 {
    break_even_interval(inst.beta_s(), inst.d_min_model(), inst.price_floor())
}

/// Slots of demand the generator side can see: `floor([w - delta_s]^+)`.
pub fn ep_window(window: usize, delta_s: f64) -> usize {
    if !delta_s.is_finite() {
        return 0;
    }
    let spare = window as f64 - delta_s;
    if spare <= 0.0 {
        0
    } else {
        spare.floor() as usize
    }
}

/// Joint online schedule with look-ahead `window`.
pub fn dcmon(inst: &Instance, window: usize) -> Result<Schedule> {
    dcmon_with(inst, window, a_priori_break_even(inst))
}

/// As [`dcmon`] with an explicit break-even length.
///
/// Server decisions inside the generator window are computed ahead of time
/// by replaying the server fleet on data no later than `t + window`. This is
/// exact as long as no idle stretch reaches break-even later than
/// `delta_s` slots after it starts.
pub fn dcmon_with(inst: &Instance, window: usize, delta_s: f64) -> Result<Schedule> {
    let ep_w = ep_window(window, delta_s);
    let mut stream = LookaheadStream::new(inst, window);
    let mut servers = GcsrFleet::new(window);
    let mut gens = ChaseFleet::new(*inst.generator());
    let power = inst.power();
    let mut x = Vec::with_capacity(inst.horizon());
    let mut y = Vec::with_capacity(inst.horizon());
    let mut ahead = Vec::with_capacity(ep_w + 1);

    while stream.has_current() {
        let t = stream.now();
        let cap = stream.limit();
        let xt = servers.step(&stream, t, cap)?;
        let now = stream.slot(t)?.expect("current slot is revealed");
        ahead.clear();
        ahead.push((power.demand(now.regime, f64::from(xt), now.workload), now.price));
        let mut spec = servers.clone();
        for tau in t + 1..=t + ep_w {
            let Some(v) = stream.slot(tau)? else { break };
            let xs = spec.step(&stream, tau, cap)?;
            ahead.push((power.demand(v.regime, f64::from(xs), v.workload), v.price));
        }
        x.push(xt);
        y.push(gens.step(&ahead));
        stream.advance();
    }
    Ok(Schedule::dispatched(inst, x, y))
}
