//! Regret chasing with look-ahead: switch a generator slice on or off once
//! its cumulative regret is seen to reach zero or its floor.

use crate::model::GeneratorModel;
use crate::offline::{regret_increment, regret_step, slice_energy};

/// State of one generator slice.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChaseSlice {
    pub on: bool,
    /// Regret after the previous slot.
    pub regret: f64,
}

impl ChaseSlice {
    pub fn new(gen: &GeneratorModel) -> Self {
        ChaseSlice { on: false, regret: -gen.beta_g }
    }

    /// Decides slot `window[0]` from `(energy, price)` over the revealed window.
    /// Holds the previous state when no extreme is in sight.
    pub fn step(&mut self, gen: &GeneratorModel, window: &[(f64, f64)]) -> bool {
        let Some(&(e0, p0)) = window.first() else {
            return self.on;
        };
        let r0 = regret_increment(e0, p0, gen);
        if gen.beta_g == 0.0 {
            self.on = r0 > 0.0;
            self.regret = 0.0;
            return self.on;
        }
        let mut r = self.regret;
        for &(e, p) in window {
            r = regret_step(r, regret_increment(e, p, gen), gen.beta_g);
            if r == 0.0 || r == -gen.beta_g {
                self.on = r == 0.0;
                break;
            }
        }
        self.regret = regret_step(self.regret, r0, gen.beta_g);
        self.on
    }
}

/// All generator slices; slice `i` sees `min(L, [e - (i-1)L]^+)`.
#[derive(Debug, Clone)]
pub struct ChaseFleet {
    gen: GeneratorModel,
    slices: Vec<ChaseSlice>,
}

impl ChaseFleet {
    pub fn new(gen: GeneratorModel) -> Self {
        ChaseFleet { gen, slices: vec![ChaseSlice::new(&gen); gen.count as usize] }
    }

    pub fn slices(&self) -> &[ChaseSlice] {
        &self.slices
    }

    /// Decides `y(t)` from `(demand, price)` over slots `t..`.
    pub fn step(&mut self, window: &[(f64, f64)]) -> u32 {
        let cap = self.gen.capacity;
        let mut y = 0;
        let mut sliced = Vec::with_capacity(window.len());
        for (k, s) in self.slices.iter_mut().enumerate() {
            let off = k as f64 * cap;
            sliced.clear();
            sliced.extend(window.iter().map(|&(e, p)| ((e - off).clamp(0.0, cap), p)));
            y += u32::from(s.step(&self.gen, &sliced));
        }
        y
    }
}

/// One slice over fully known inputs with look-ahead `window`.
pub fn chase_slice(e_i: &[f64], price: &[f64], gen: &GeneratorModel, window: usize) -> Vec<bool> {
    let t_len = e_i.len();
    let mut s = ChaseSlice::new(gen);
    let mut buf = Vec::with_capacity(window + 1);
    (0..t_len)
        .map(|t| {
            let end = t.saturating_add(window).min(t_len - 1);
            buf.clear();
            buf.extend((t..=end).map(|k| (e_i[k], price[k])));
            s.step(gen, &buf)
        })
        .collect()
}

/// Generator schedule for a demand series, each slot reading `window` slots ahead.
pub fn chase(demand: &[f64], price: &[f64], gen: &GeneratorModel, window: usize) -> Vec<u32> {
    let mut y = vec![0u32; demand.len()];
    for i in 1..=gen.count {
        let e_i = slice_energy(demand, i, gen.capacity);
        for (yt, on) in y.iter_mut().zip(chase_slice(&e_i, price, gen, window)) {
            *yt += u32::from(on);
        }
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen() -> GeneratorModel {
        GeneratorModel::new(60.0, 0.08, 1.2, 24.0, 1).unwrap()
    }

    #[test]
    fn reacts_when_regret_hits_zero() {
        let e = vec![60.0; 30];
        let p = vec![0.12; 30];
        let on = chase_slice(&e, &p, &gen(), 0);
        assert_eq!(on.iter().position(|&b| b), Some(19));
        assert!(on[19..].iter().all(|&b| b));
        let early = chase_slice(&e, &p, &gen(), 20);
        assert!(early.iter().all(|&b| b));
    }

    #[test]
    fn turns_off_when_regret_hits_floor() {
        let mut e = vec![60.0; 25];
        e.extend(vec![0.0; 25]);
        let p = vec![0.12; 50];
        let on = chase_slice(&e, &p, &gen(), 0);
        // zero at slot 19, then -1.2 per idle slot from slot 25: floor at slot 44
        assert!(on[19..44].iter().all(|&b| b));
        assert!(on[44..].iter().all(|&b| !b));
    }

    #[test]
    fn fleet_matches_per_slice_runs() {
        let g = GeneratorModel::new(2.0, 0.05, 0.1, 0.5, 3).unwrap();
        let d = [0.5, 3.0, 5.5, 4.0, 0.0, 2.5, 6.0, 1.0];
        let p = [0.2, 0.3, 0.1, 0.4, 0.2, 0.3, 0.5, 0.04];
        for w in 0..4 {
            let batch = chase(&d, &p, &g, w);
            let mut fleet = ChaseFleet::new(g);
            let online: Vec<u32> = (0..d.len())
                .map(|t| {
                    let end = (t + w).min(d.len() - 1);
                    let win: Vec<(f64, f64)> = (t..=end).map(|k| (d[k], p[k])).collect();
                    fleet.step(&win)
                })
                .collect();
            assert_eq!(batch, online);
        }
    }
}
