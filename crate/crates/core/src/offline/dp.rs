//! Exact joint optimum as a shortest path through the layered state graph.
//!
//! Layer `t` holds states `(x, y)` with `ceil(a(t)) <= x <= M` and `y <= N`.
//! Entering `(x, y)` at slot `t` costs `psi(y, p(t), d_t(x))` plus switching.
//! Because switching splits into independent server and generator parts, the
//! relaxation of a whole layer runs in `O(M N)`.

use std::cmp::{Ordering, Reverse};
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::model::{evaluate, psi, CostBreakdown, Instance, Schedule};

pub const DEFAULT_STATE_BUDGET: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathMethod {
    /// Layer-by-layer relaxation.
    #[default]
    Layered,
    /// Textbook Dijkstra over the explicit edge set.
    Dijkstra,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OfflineOptions {
    /// Cap on `(M+1)(N+1)T` graph nodes.
    pub state_budget: u64,
    pub method: PathMethod,
}

impl Default for OfflineOptions {
    fn default() -> Self {
        OfflineOptions { state_budget: DEFAULT_STATE_BUDGET, method: PathMethod::Layered }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct OfflineSolution {
    pub schedule: Schedule,
    pub cost: CostBreakdown,
}

/// Minimum-cost joint schedule. Ties go to the lexicographically smallest
/// predecessor `(x, y)` at each layer.
pub fn solve_dcm_offline(inst: &Instance, opts: &OfflineOptions) -> Result<OfflineSolution> {
    let m = inst.max_servers() as usize;
    let n = inst.generator().count as usize;
    let nodes = (m as u128 + 1) * (n as u128 + 1) * inst.horizon() as u128;
    if nodes > u128::from(opts.state_budget) {
        return Err(Error::StateBudget { nodes, budget: u128::from(opts.state_budget) });
    }
    let (x, y) = match opts.method {
        PathMethod::Layered => layered(inst, m, n),
        PathMethod::Dijkstra => dijkstra(inst, m, n),
    };
    let schedule = Schedule::dispatched(inst, x, y);
    let cost = evaluate(inst, &schedule)?;
    Ok(OfflineSolution { schedule, cost })
}

/// `out[j] = min_i vals[i] + step * [j - i]^+`, smallest `i` on ties.
fn relax_line(vals: &[f64], step: f64, out: &mut [f64], arg: &mut [u32]) {
    let len = vals.len();
    let mut best = f64::INFINITY;
    let mut bi = len - 1;
    for j in (0..len).rev() {
        if vals[j] <= best {
            best = vals[j];
            bi = j;
        }
        out[j] = best;
        arg[j] = bi as u32;
    }
    let mut pb: Option<usize> = None;
    for j in 1..len {
        let cand = j - 1;
        pb = match pb {
            None => Some(cand),
            Some(b) if vals[cand] + step < vals[b] + step * (j - b) as f64 => Some(cand),
            keep => keep,
        };
        let b = pb.unwrap_or(cand);
        let c = vals[b] + step * (j - b) as f64;
        if c <= out[j] {
            out[j] = c;
            arg[j] = b as u32;
        }
    }
}

fn layered(inst: &Instance, m: usize, n: usize) -> (Vec<u32>, Vec<u32>) {
    let t_len = inst.horizon();
    let w = n + 1;
    let h = m + 1;
    let size = h * w;
    let gen = inst.generator();
    let beta_s = inst.beta_s();

    let mut dist = vec![f64::INFINITY; size];
    dist[0] = 0.0;
    let mut pred = vec![0u32; size * t_len];
    let mut a_val = vec![0.0; size];
    let mut a_arg = vec![0u32; size];
    let mut col = vec![0.0; h];
    let mut col_out = vec![0.0; h];
    let mut col_arg = vec![0u32; h];

    for t in 0..t_len {
        for xp in 0..h {
            let r = xp * w..(xp + 1) * w;
            relax_line(&dist[r.clone()], gen.beta_g, &mut a_val[r.clone()], &mut a_arg[r]);
        }
        let lo = inst.required_servers(t) as usize;
        let p = inst.price()[t];
        let layer_pred = &mut pred[t * size..(t + 1) * size];
        for yv in 0..w {
            for xp in 0..h {
                col[xp] = a_val[xp * w + yv];
            }
            relax_line(&col, beta_s, &mut col_out, &mut col_arg);
            for xv in 0..h {
                let idx = xv * w + yv;
                if xv < lo {
                    dist[idx] = f64::INFINITY;
                    continue;
                }
                let xp = col_arg[xv] as usize;
                let yp = a_arg[xp * w + yv] as usize;
                layer_pred[idx] = (xp * w + yp) as u32;
                dist[idx] = col_out[xv] + psi(yv as u32, p, inst.demand(t, xv as u32), gen);
            }
        }
    }

    let mut best = 0;
    for i in 1..size {
        if dist[i] < dist[best] {
            best = i;
        }
    }
    let mut x = vec![0u32; t_len];
    let mut y = vec![0u32; t_len];
    let mut cur = best;
    for t in (0..t_len).rev() {
        x[t] = (cur / w) as u32;
        y[t] = (cur % w) as u32;
        cur = pred[t * size + cur] as usize;
    }
    (x, y)
}

#[derive(PartialEq)]
struct Key(f64, usize);

impl Eq for Key {}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0).then(self.1.cmp(&other.1))
    }
}

fn dijkstra(inst: &Instance, m: usize, n: usize) -> (Vec<u32>, Vec<u32>) {
    let t_len = inst.horizon();
    let w = n + 1;
    let size = (m + 1) * w;
    let gen = inst.generator();
    let beta_s = inst.beta_s();
    // node 0 is the source; layer t occupies 1 + t*size ..
    let total = 1 + size * t_len;
    let node = |t: usize, s: usize| 1 + t * size + s;

    let mut dist = vec![f64::INFINITY; total];
    let mut pred = vec![usize::MAX; total];
    let mut done = vec![false; total];
    let mut heap = BinaryHeap::new();
    dist[0] = 0.0;
    heap.push(Reverse(Key(0.0, 0)));

    while let Some(Reverse(Key(d, u))) = heap.pop() {
        if done[u] {
            continue;
        }
        done[u] = true;
        let (t_next, xp, yp) = if u == 0 {
            (0, 0, 0)
        } else {
            let s = (u - 1) % size;
            ((u - 1) / size + 1, s / w, s % w)
        };
        if t_next == t_len {
            continue;
        }
        let lo = inst.required_servers(t_next) as usize;
        let p = inst.price()[t_next];
        for xv in lo..=m {
            let demand = inst.demand(t_next, xv as u32);
            let sw_x = beta_s * xv.saturating_sub(xp) as f64;
            for yv in 0..w {
                let wgt = sw_x + gen.beta_g * yv.saturating_sub(yp) as f64 + psi(yv as u32, p, demand, gen);
                let v = node(t_next, xv * w + yv);
                let nd = d + wgt;
                if nd < dist[v] || (nd == dist[v] && u < pred[v]) {
                    dist[v] = nd;
                    pred[v] = u;
                    heap.push(Reverse(Key(nd, v)));
                }
            }
        }
    }

    let last = node(t_len - 1, 0);
    let mut best = last;
    for v in last..last + size {
        if dist[v] < dist[best] {
            best = v;
        }
    }
    let mut x = vec![0u32; t_len];
    let mut y = vec![0u32; t_len];
    let mut cur = best;
    for t in (0..t_len).rev() {
        let s = cur - 1 - t * size;
        x[t] = (s / w) as u32;
        y[t] = (s % w) as u32;
        cur = pred[cur];
    }
    (x, y)
}
