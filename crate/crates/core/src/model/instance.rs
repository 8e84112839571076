use crate::error::{Error, Result};

use super::generator::GeneratorModel;
use super::power::PowerModel;

/// A problem instance over slots `0..T`.
///
/// Slots are 0-based here; trace files number them from 1. The state before
/// slot 0 is all servers and generators off.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    workload: Vec<f64>,
    price: Vec<f64>,
    regime: Vec<u16>,
    power: PowerModel,
    generator: GeneratorModel,
    price_floor: f64,
    price_cap: f64,
}

impl Instance {
    /// Builds an instance, assigning cooling regimes from the periodic schedule.
    pub fn new(workload: Vec<f64>, price: Vec<f64>, power: PowerModel, generator: GeneratorModel) -> Result<Self> {
        if workload.len() != price.len() {
            return Err(Error::model(format!(
                "workload has {} slots but price has {}",
                workload.len(),
                price.len()
            )));
        }
        if workload.is_empty() {
            return Err(Error::model("instance needs at least one slot"));
        }
        if let Some(t) = workload.iter().position(|a| !a.is_finite() || *a < 0.0) {
            return Err(Error::model(format!("workload at slot {t} must be finite and non-negative")));
        }
        if let Some(t) = price.iter().position(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::model(format!("price at slot {t} must be finite and non-negative")));
        }
        power.server.validate()?;
        generator.validate()?;
        let regime = (0..workload.len()).map(|t| power.cooling.regime_at(t) as u16).collect();
        let price_floor = price.iter().copied().fold(f64::INFINITY, f64::min);
        let price_cap = price.iter().copied().fold(0.0, f64::max);
        let inst = Instance { workload, price, regime, power, generator, price_floor, price_cap };
        inst.check_generator_economics()?;
        Ok(inst)
    }

    /// On-site generation must beat the peak grid price at full load.
    fn check_generator_economics(&self) -> Result<()> {
        let g = &self.generator;
        if g.count > 0 && g.full_load_unit_cost() >= self.price_cap {
            return Err(Error::model(format!(
                "generators never pay off: c_o + c_m/L = {} is not below the peak price {}",
                g.full_load_unit_cost(),
                self.price_cap
            )));
        }
        Ok(())
    }

    /// Replaces the periodic regime assignment with explicit per-slot tags.
    pub fn with_regimes(mut self, regime: Vec<u16>) -> Result<Self> {
        if regime.len() != self.workload.len() {
            return Err(Error::model("regime tags must cover every slot"));
        }
        let n = self.power.cooling.regime_count();
        if let Some(t) = regime.iter().position(|&r| usize::from(r) >= n) {
            return Err(Error::model(format!("unknown cooling regime at slot {t}")));
        }
        self.regime = regime;
        Ok(self)
    }

    /// Declares the price range known ahead of time; the series must lie inside it.
    pub fn with_price_bounds(mut self, floor: f64, cap: f64) -> Result<Self> {
        if !(floor <= self.price_floor && cap >= self.price_cap && floor >= 0.0) {
            return Err(Error::model("declared price bounds must contain every price"));
        }
        self.price_floor = floor;
        self.price_cap = cap;
        self.check_generator_economics()?;
        Ok(self)
    }

    pub fn with_generator(mut self, generator: GeneratorModel) -> Result<Self> {
        generator.validate()?;
        self.generator = generator;
        self.check_generator_economics()?;
        Ok(self)
    }

    pub fn with_beta_s(mut self, beta_s: f64) -> Result<Self> {
        self.power.server.beta_s = beta_s;
        self.power.server.validate()?;
        Ok(self)
    }

    /// First `len` slots; the declared price bounds carry over.
    pub fn truncated(&self, len: usize) -> Instance {
        let len = len.clamp(1, self.horizon());
        Instance {
            workload: self.workload[..len].to_vec(),
            price: self.price[..len].to_vec(),
            regime: self.regime[..len].to_vec(),
            power: self.power.clone(),
            generator: self.generator,
            price_floor: self.price_floor,
            price_cap: self.price_cap,
        }
    }

    pub fn horizon(&self) -> usize {
        self.workload.len()
    }

    pub fn workload(&self) -> &[f64] {
        &self.workload
    }

    pub fn price(&self) -> &[f64] {
        &self.price
    }

    pub fn regimes(&self) -> &[u16] {
        &self.regime
    }

    pub fn power(&self) -> &PowerModel {
        &self.power
    }

    pub fn generator(&self) -> &GeneratorModel {
        &self.generator
    }

    pub fn beta_s(&self) -> f64 {
        self.power.server.beta_s
    }

    pub fn price_floor(&self) -> f64 {
        self.price_floor
    }

    pub fn price_cap(&self) -> f64 {
        self.price_cap
    }

    /// `ceil(a(t))`, the fewest servers that can carry slot `t`.
    pub fn required_servers(&self, t: usize) -> u32 {
        self.workload[t].ceil() as u32
    }

    /// `M = max_t ceil(a(t))`.
    pub fn max_servers(&self) -> u32 {
        (0..self.horizon()).map(|t| self.required_servers(t)).max().unwrap_or(0)
    }

    /// `d_t(x)` without checking `x >= ceil(a(t))`.
    #[inline]
    pub fn demand(&self, t: usize, x: u32) -> f64 {
        self.power.demand(usize::from(self.regime[t]), f64::from(x), self.workload[t])
    }

    /// `g_t(x, a(t))`, rejecting server counts below the workload.
    pub fn total_power(&self, t: usize, x: u32) -> Result<f64> {
        if t >= self.horizon() {
            return Err(Error::model(format!("slot {t} is past the horizon")));
        }
        if x < self.required_servers(t) {
            return Err(Error::Infeasible { slot: t, constraint: crate::error::Constraint::ServerCapacity });
        }
        Ok(self.demand(t, x))
    }

    /// `d_t(i) - d_t(i-1)`, the cost driver of the `i`-th server slice.
    #[inline]
    pub fn marginal_demand(&self, t: usize, i: u32) -> f64 {
        debug_assert!(i >= 1);
        self.demand(t, i) - self.demand(t, i - 1)
    }

    /// Facility demand under a server schedule.
    pub fn demand_series(&self, x: &[u32]) -> Vec<f64> {
        x.iter().enumerate().map(|(t, &xi)| self.demand(t, xi)).collect()
    }

    /// Smallest one-server increment observed on this trace.
    pub fn d_min_trace(&self) -> f64 {
        (0..self.horizon()).map(|t| self.marginal_demand(t, 1)).fold(f64::INFINITY, f64::min)
    }

    /// Smallest one-server increment the model allows, known before any slot is seen.
    pub fn d_min_model(&self) -> f64 {
        self.power.d_min()
    }
}
