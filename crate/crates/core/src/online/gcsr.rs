//! Generalized capacity-scaling with reservation: one break-even timer per
//! server slice, with look-ahead used to turn idle servers off early.

use crate::error::Result;
use crate::model::{Instance, PowerModel};
use crate::offline::break_even_reached;

use super::stream::{LookaheadStream, SlotView};

/// State of one server slice.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct SliceState {
    pub on: bool,
    /// Idle cost accrued since the slice last carried work.
    pub acc: f64,
}

impl SliceState {
    /// Decides the first slot of `window`, which yields slice workload and
    /// idle cost per revealed slot. `ends_input` says the window reaches past
    /// the last slot, so idling to the end can never be repaid.
    pub fn step(&mut self, beta_s: f64, window: impl Iterator<Item = (f64, f64)>, ends_input: bool) -> bool {
        let mut window = window.peekable();
        let Some(&(a_now, cost_now)) = window.peek() else {
            return self.on;
        };
        if a_now > 0.0 {
            self.on = true;
            self.acc = 0.0;
            return true;
        }
        if !self.on {
            self.acc = 0.0;
            return false;
        }
        let mut sum = self.acc;
        let mut turn_off = ends_input;
        for (a, cost) in window {
            if a > 0.0 {
                turn_off = false;
                break;
            }
            sum += cost;
            if break_even_reached(sum, beta_s) {
                turn_off = true;
                break;
            }
        }
        if turn_off {
            self.on = false;
            self.acc = 0.0;
        } else {
            self.acc += cost_now;
        }
        self.on
    }
}

/// One slice over fully known inputs, reading at most `window` slots ahead.
pub fn gcsr_slice(a_i: &[f64], price: &[f64], d_i: &[f64], beta_s: f64, window: usize) -> Vec<bool> {
    let t_len = a_i.len();
    let mut s = SliceState::default();
    (0..t_len)
        .map(|t| {
            let reach = t.saturating_add(window);
            let end = reach.min(t_len - 1);
            s.step(beta_s, (t..=end).map(|k| (a_i[k], price[k] * d_i[k])), reach >= t_len)
        })
        .collect()
}

/// All server slices driven from a look-ahead stream.
#[derive(Debug, Clone)]
pub struct GcsrFleet {
    window: usize,
    slices: Vec<SliceState>,
}

fn slice_cost(power: &PowerModel, v: &SlotView, i: usize) -> (f64, f64) {
    let a_i = (v.workload - (i as f64 - 1.0)).clamp(0.0, 1.0);
    let d = power.demand(v.regime, i as f64, v.workload) - power.demand(v.regime, i as f64 - 1.0, v.workload);
    (a_i, v.price * d)
}

impl GcsrFleet {
    pub fn new(window: usize) -> Self {
        GcsrFleet { window, slices: Vec::new() }
    }

    pub fn slices(&self) -> &[SliceState] {
        &self.slices
    }

    /// Decides `x(t)` reading slots `t..=min(t+w, cap)`.
    pub fn step(&mut self, stream: &LookaheadStream<'_>, t: usize, cap: usize) -> Result<u32> {
        let end = t.saturating_add(self.window).min(cap);
        let view = stream.range(t, end)?;
        let ends_input = view.len() < end - t + 1;
        let Some(now) = view.first() else {
            return Ok(0);
        };
        let need = now.workload.ceil() as usize;
        if self.slices.len() < need {
            self.slices.resize(need, SliceState::default());
        }
        let power = stream.power();
        let beta_s = stream.beta_s();
        let mut x = 0;
        for (k, s) in self.slices.iter_mut().enumerate() {
            let i = k + 1;
            let on = if !s.on && now.workload <= (i - 1) as f64 {
                s.acc = 0.0;
                false
            } else {
                s.step(beta_s, view.iter().map(|v| slice_cost(power, v, i)), ends_input)
            };
            x += u32::from(on);
        }
        Ok(x)
    }
}

/// Runs the fleet over the whole instance with look-ahead `window`.
pub fn gcsr(inst: &Instance, window: usize) -> Result<Vec<u32>> {
    let mut stream = LookaheadStream::new(inst, window);
    let mut fleet = GcsrFleet::new(window);
    let mut x = Vec::with_capacity(inst.horizon());
    while stream.has_current() {
        let t = stream.now();
        x.push(fleet.step(&stream, t, stream.limit())?);
        stream.advance();
    }
    Ok(x)
}
