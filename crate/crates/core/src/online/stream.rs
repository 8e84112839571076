use std::cell::Cell;

use crate::error::{Error, Result};
use crate::model::{GeneratorModel, Instance, PowerModel};

/// What is known about one slot once it has been revealed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlotView {
    pub workload: f64,
    pub price: f64,
    pub regime: usize,
}

/// Causal view of an instance: at slot `t` only slots `t..=t+w` are readable.
///
/// Model parameters and the declared price range are known up front. Reading
/// past the window is an error; reading past the end of input yields `None`.
#[derive(Debug)]
pub struct LookaheadStream<'a> {
    inst: &'a Instance,
    window: usize,
    now: usize,
    furthest: Cell<Option<usize>>,
}

impl<'a> LookaheadStream<'a> {
    pub fn new(inst: &'a Instance, window: usize) -> Self {
        LookaheadStream { inst, window, now: 0, furthest: Cell::new(None) }
    }

    pub fn now(&self) -> usize {
        self.now
    }

    pub fn window(&self) -> usize {
        self.window
    }

    /// Last readable slot.
    pub fn limit(&self) -> usize {
        self.now.saturating_add(self.window)
    }

    pub fn advance(&mut self) {
        self.now += 1;
    }

    /// Whether slot `now` exists.
    pub fn has_current(&self) -> bool {
        self.now < self.inst.horizon()
    }

    pub fn slot(&self, tau: usize) -> Result<Option<SlotView>> {
        if tau > self.limit() {
            return Err(Error::WindowViolation { requested: tau, limit: self.limit() });
        }
        if tau >= self.inst.horizon() {
            return Ok(None);
        }
        self.furthest.set(Some(self.furthest.get().map_or(tau, |f| f.max(tau))));
        Ok(Some(SlotView {
            workload: self.inst.workload()[tau],
            price: self.inst.price()[tau],
            regime: usize::from(self.inst.regimes()[tau]),
        }))
    }

    /// Revealed slots `from..=min(to, end of input)`.
    pub fn range(&self, from: usize, to: usize) -> Result<Vec<SlotView>> {
        let mut out = Vec::with_capacity(to.saturating_sub(from) + 1);
        for tau in from..=to {
            match self.slot(tau)? {
                Some(v) => out.push(v),
                None => break,
            }
        }
        Ok(out)
    }

    /// Highest slot index read so far.
    pub fn furthest_read(&self) -> Option<usize> {
        self.furthest.get()
    }

    pub fn power(&self) -> &PowerModel {
        self.inst.power()
    }

    pub fn generator(&self) -> &GeneratorModel {
        self.inst.generator()
    }

    pub fn beta_s(&self) -> f64 {
        self.inst.beta_s()
    }

    pub fn price_floor(&self) -> f64 {
        self.inst.price_floor()
    }

    pub fn price_cap(&self) -> f64 {
        self.inst.price_cap()
    }
}
