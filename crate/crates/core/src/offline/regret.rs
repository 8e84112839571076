use std::ops::Range;

use crate::model::GeneratorModel;

use super::slices::slice_energy;

/// Per-slot saving `psi(0) - psi(1)` of running one generator on slice energy `e`.
#[inline]
pub fn regret_increment(e: f64, p: f64, gen: &GeneratorModel) -> f64 {
    if p > gen.c_o {
        (p - gen.c_o) * e - gen.c_m
    } else {
        -gen.c_m
    }
}

/// One step of the clamped regret recursion. Values within rounding distance
/// of either bound snap onto it so that ties are detected exactly.
#[inline]
pub fn regret_step(prev: f64, r: f64, beta_g: f64) -> f64 {
    let next = (prev + r).clamp(-beta_g, 0.0);
    let eps = 1e-12 * beta_g.max(1.0);
    if next > -eps {
        0.0
    } else if next < -beta_g + eps {
        -beta_g
    } else {
        next
    }
}

/// Cumulative regret of one generator slice, starting from `-beta_g`.
#[derive(Debug, Clone, PartialEq)]
pub struct RegretProcess {
    pub increments: Vec<f64>,
    /// `regret[t]` is the value after slot `t`.
    pub regret: Vec<f64>,
    pub beta_g: f64,
}

impl RegretProcess {
    pub fn new(e_i: &[f64], price: &[f64], gen: &GeneratorModel) -> Self {
        let increments: Vec<f64> = e_i.iter().zip(price).map(|(&e, &p)| regret_increment(e, p, gen)).collect();
        let mut regret = Vec::with_capacity(increments.len());
        let mut r = -gen.beta_g;
        for &inc in &increments {
            r = regret_step(r, inc, gen.beta_g);
            regret.push(r);
        }
        RegretProcess { increments, regret, beta_g: gen.beta_g }
    }

    pub fn segments(&self) -> Vec<CriticalSegment> {
        critical_segments(&self.regret, self.beta_g)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SegmentKind {
    /// Before the regret first leaves its floor for good: off.
    Start,
    /// Climb from the floor to zero: on.
    On,
    /// Fall from zero to the floor: off.
    Off,
    /// After the last visit to zero: off.
    End,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalSegment {
    pub slots: Range<usize>,
    pub kind: SegmentKind,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Extreme {
    Floor,
    Zero,
}

/// Splits the horizon at critical points of a regret path.
///
/// A critical point is the last visit to one bound before the first visit to
/// the other. The path starts on the floor and is treated as returning to it
/// one slot past the horizon, so a climb to zero that holds until the end
/// still counts as a climb. Empty segments are dropped.
pub fn critical_segments(regret: &[f64], beta_g: f64) -> Vec<CriticalSegment> {
    let t_len = regret.len();
    let classify = |r: f64| {
        if r == 0.0 {
            Some(Extreme::Zero)
        } else if r == -beta_g {
            Some(Extreme::Floor)
        } else {
            None
        }
    };
    // Points are in 1-based time: 0 is the initial state, t the end of slot t-1.
    let mut points: Vec<(usize, Extreme)> = Vec::new();
    let mut last = (0usize, Extreme::Floor);
    for (k, &r) in regret.iter().enumerate() {
        if let Some(e) = classify(r) {
            if e != last.1 {
                points.push(last);
            }
            last = (k + 1, e);
        }
    }
    if last.1 == Extreme::Zero {
        points.push(last);
    }

    let mut segs = Vec::new();
    let mut push = |slots: Range<usize>, kind| {
        if !slots.is_empty() {
            segs.push(CriticalSegment { slots, kind });
        }
    };
    let Some(&(first, _)) = points.first() else {
        push(0..t_len, SegmentKind::Start);
        return segs;
    };
    push(0..first, SegmentKind::Start);
    for w in points.windows(2) {
        let kind = match w[0].1 {
            Extreme::Floor => SegmentKind::On,
            Extreme::Zero => SegmentKind::Off,
        };
        push(w[0].0..w[1].0, kind);
    }
    let end = points.last().map_or(0, |p| p.0);
    push(end..t_len, SegmentKind::End);
    segs
}

/// Optimal on/off schedule of one generator slice.
pub fn ofa_ep_slice(e_i: &[f64], price: &[f64], gen: &GeneratorModel) -> Vec<bool> {
    let proc = RegretProcess::new(e_i, price, gen);
    if gen.beta_g == 0.0 {
        return proc.increments.iter().map(|&r| r > 0.0).collect();
    }
    let mut on = vec![false; e_i.len()];
    for seg in proc.segments() {
        if seg.kind == SegmentKind::On {
            on[seg.slots].iter_mut().for_each(|s| *s = true);
        }
    }
    on
}

/// Optimal generator schedule for a fixed demand series, slice by slice.
pub fn solve_ep_offline(demand: &[f64], price: &[f64], gen: &GeneratorModel) -> Vec<u32> {
    let mut y = vec![0u32; demand.len()];
    for i in 1..=gen.count {
        let e_i = slice_energy(demand, i, gen.capacity);
        if e_i.iter().all(|&e| e == 0.0) {
            break;
        }
        for (yt, on) in y.iter_mut().zip(ofa_ep_slice(&e_i, price, gen)) {
            *yt += u32::from(on);
        }
    }
    y
}
