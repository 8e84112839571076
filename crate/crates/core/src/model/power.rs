//! Facility power: servers, cooling and power conditioning.
//!
//! Cooling and conditioning curves are written in normalized IT load
//! `b / b_max` and scaled back by `b_max`, so a single coefficient set
//! serves facilities of any size.

use std::ops::Range;

use crate::error::{Error, Result};

/// Linear server power `b(x, a) = c_idle*x + (c_peak - c_idle)*a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ServerModel {
    pub c_idle: f64,
    pub c_peak: f64,
    /// Wear-and-tear cost of turning one server on.
    pub beta_s: f64,
}

impl ServerModel {
    pub fn new(c_idle: f64, c_peak: f64, beta_s: f64) -> Result<Self> {
        let m = ServerModel { c_idle, c_peak, beta_s };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.c_idle.is_finite() && self.c_peak.is_finite() && self.beta_s.is_finite()) {
            return Err(Error::model("server parameters must be finite"));
        }
        if self.c_idle < 0.0 || self.c_peak < self.c_idle {
            return Err(Error::model("server power needs 0 <= c_idle <= c_peak"));
        }
        if self.beta_s < 0.0 {
            return Err(Error::model("beta_s must be non-negative"));
        }
        Ok(())
    }

    #[inline]
    pub fn power(&self, x: f64, a: f64) -> f64 {
        self.c_idle * x + (self.c_peak - self.c_idle) * a
    }

    /// Power fraction of an idle server, `c_idle / c_peak`.
    pub fn ppf(&self) -> f64 {
        if self.c_peak == 0.0 {
            0.0
        } else {
            self.c_idle / self.c_peak
        }
    }
}

/// One cooling curve in normalized load.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Curve {
    /// `q*b^2 + l*b + c`
    Quadratic { q: f64, l: f64, c: f64 },
    /// `k*b^3`
    Cubic { k: f64 },
}

impl Curve {
    #[inline]
    fn eval(&self, bh: f64) -> f64 {
        match *self {
            Curve::Quadratic { q, l, c } => (q * bh + l) * bh + c,
            Curve::Cubic { k } => k * bh * bh * bh,
        }
    }

    fn coefficients(&self) -> Vec<f64> {
        match *self {
            Curve::Quadratic { q, l, c } => vec![q, l, c],
            Curve::Cubic { k } => vec![k],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoolingKind {
    None,
    Quadratic,
    Cubic,
}

/// A named cooling regime active on `hours` (half-open, modulo the period).
#[derive(Debug, Clone, PartialEq)]
pub struct CoolingRegime {
    pub name: String,
    pub hours: Range<usize>,
    pub curve: Curve,
}

/// Time-varying cooling power. Every slot falls in exactly one regime.
#[derive(Debug, Clone, PartialEq)]
pub struct CoolingModel {
    kind: CoolingKind,
    b_max: f64,
    period: usize,
    regimes: Vec<CoolingRegime>,
}

impl CoolingModel {
    pub fn none() -> Self {
        CoolingModel { kind: CoolingKind::None, b_max: 1.0, period: 1, regimes: Vec::new() }
    }

    /// Regimes must tile `0..period` without overlap and share one curve kind.
    pub fn new(b_max: f64, period: usize, regimes: Vec<CoolingRegime>) -> Result<Self> {
        if regimes.is_empty() {
            return Err(Error::model("cooling needs at least one regime"));
        }
        if !(b_max.is_finite() && b_max > 0.0) {
            return Err(Error::model("cooling b_max must be positive"));
        }
        if period == 0 {
            return Err(Error::model("cooling period must be positive"));
        }
        let kind = match regimes[0].curve {
            Curve::Quadratic { .. } => CoolingKind::Quadratic,
            Curve::Cubic { .. } => CoolingKind::Cubic,
        };
        let mut covered = vec![0u32; period];
        for r in &regimes {
            let same = matches!(
                (kind, r.curve),
                (CoolingKind::Quadratic, Curve::Quadratic { .. }) | (CoolingKind::Cubic, Curve::Cubic { .. })
            );
            if !same {
                return Err(Error::model("cooling regimes must share one curve kind"));
            }
            if r.curve.coefficients().iter().any(|c| !c.is_finite() || *c < 0.0) {
                return Err(Error::model(format!(
                    "cooling regime '{}' needs non-negative coefficients",
                    r.name
                )));
            }
            if r.hours.start >= r.hours.end || r.hours.end > period {
                return Err(Error::model(format!("cooling regime '{}' has a bad interval", r.name)));
            }
            for h in r.hours.clone() {
                covered[h] += 1;
            }
        }
        if let Some(h) = covered.iter().position(|&c| c != 1) {
            return Err(Error::model(format!(
                "cooling regimes must cover each hour exactly once (hour {h})"
            )));
        }
        Ok(CoolingModel { kind, b_max, period, regimes })
    }

    pub fn kind(&self) -> CoolingKind {
        self.kind
    }

    pub fn b_max(&self) -> f64 {
        self.b_max
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn regimes(&self) -> &[CoolingRegime] {
        &self.regimes
    }

    /// Number of distinct regimes (at least one, even without cooling).
    pub fn regime_count(&self) -> usize {
        self.regimes.len().max(1)
    }

    /// Regime index for a 0-based slot under the periodic schedule.
    pub fn regime_at(&self, slot: usize) -> usize {
        if self.regimes.is_empty() {
            return 0;
        }
        let h = slot % self.period;
        self.regimes.iter().position(|r| r.hours.contains(&h)).unwrap_or(0)
    }

    pub fn regime_index(&self, name: &str) -> Option<usize> {
        if self.regimes.is_empty() {
            return Some(0);
        }
        self.regimes.iter().position(|r| r.name == name)
    }

    #[inline]
    pub fn power(&self, regime: usize, b: f64) -> f64 {
        match self.regimes.get(regime) {
            None => 0.0,
            Some(r) => r.curve.eval(b / self.b_max) * self.b_max,
        }
    }
}

/// Power-conditioning losses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ConditioningModel {
    None,
    /// `(c2*b^2 + c1*b + c0) * b_max` in normalized load.
    Quadratic { b_max: f64, c2: f64, c1: f64, c0: f64 },
}

impl ConditioningModel {
    pub fn quadratic(b_max: f64, c2: f64, c1: f64, c0: f64) -> Result<Self> {
        if !(b_max.is_finite() && b_max > 0.0) {
            return Err(Error::model("conditioning b_max must be positive"));
        }
        if [c2, c1, c0].iter().any(|c| !c.is_finite() || *c < 0.0) {
            return Err(Error::model("conditioning coefficients must be non-negative"));
        }
        Ok(ConditioningModel::Quadratic { b_max, c2, c1, c0 })
    }

    #[inline]
    pub fn power(&self, b: f64) -> f64 {
        match *self {
            ConditioningModel::None => 0.0,
            ConditioningModel::Quadratic { b_max, c2, c1, c0 } => {
                let bh = b / b_max;
                ((c2 * bh + c1) * bh + c0) * b_max
            }
        }
    }
}

/// Built-in climate presets for cooling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    NewYork,
    SanJose,
}

impl Region {
    pub fn parse(s: &str) -> Option<Region> {
        match s.to_ascii_lowercase().as_str() {
            "ny" | "newyork" | "new-york" => Some(Region::NewYork),
            "sj" | "sanjose" | "san-jose" => Some(Region::SanJose),
            _ => None,
        }
    }
}

/// IT load at which the presets are normalized: 0.25 kW per server.
pub fn preset_b_max(servers: u32) -> f64 {
    0.25 * f64::from(servers)
}

/// Day (hours 8-20) and night quadratic cooling for a region.
pub fn preset_cooling(region: Region, servers: u32) -> Result<CoolingModel> {
    let (day, night) = match region {
        Region::NewYork => ((0.041, 0.144, 0.047), (0.03, 0.136, 0.042)),
        Region::SanJose => ((0.06, 0.16, 0.054), (0.041, 0.144, 0.047)),
    };
    let quad = |(q, l, c): (f64, f64, f64)| Curve::Quadratic { q, l, c };
    CoolingModel::new(
        preset_b_max(servers),
        24,
        vec![
            CoolingRegime { name: "night".into(), hours: 0..8, curve: quad(night) },
            CoolingRegime { name: "day".into(), hours: 8..20, curve: quad(day) },
            CoolingRegime { name: "evening".into(), hours: 20..24, curve: quad(night) },
        ],
    )
}

pub fn preset_conditioning(servers: u32) -> Result<ConditioningModel> {
    ConditioningModel::quadratic(preset_b_max(servers), 0.012, 0.046, 0.056)
}

/// Everything that turns servers and workload into facility demand.
#[derive(Debug, Clone, PartialEq)]
pub struct PowerModel {
    pub server: ServerModel,
    pub cooling: CoolingModel,
    pub conditioning: ConditioningModel,
}

impl PowerModel {
    pub fn new(server: ServerModel, cooling: CoolingModel, conditioning: ConditioningModel) -> Result<Self> {
        server.validate()?;
        Ok(PowerModel { server, cooling, conditioning })
    }

    /// Servers only, no cooling or conditioning.
    pub fn servers_only(server: ServerModel) -> Result<Self> {
        Self::new(server, CoolingModel::none(), ConditioningModel::None)
    }

    /// Facility demand `b + f_p(b) + f_c(b)` with no feasibility check.
    #[inline]
    pub fn demand(&self, regime: usize, x: f64, a: f64) -> f64 {
        let b = self.server.power(x, a);
        b + self.conditioning.power(b) + self.cooling.power(regime, b)
    }

    /// Smallest one-server increment at zero workload over all regimes.
    pub fn d_min(&self) -> f64 {
        (0..self.cooling.regime_count())
            .map(|r| self.demand(r, 1.0, 0.0) - self.demand(r, 0.0, 0.0))
            .fold(f64::INFINITY, f64::min)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ny_day_total_at_half_load() {
        // 2500 servers at 0.25 kW each gives b_max = 625; b = 312.5 is half load.
        let cooling = preset_cooling(Region::NewYork, 2500).unwrap();
        let cond = preset_conditioning(2500).unwrap();
        let day = cooling.regime_index("day").unwrap();
        let b = 312.5;
        let fc = cooling.power(day, b);
        let fp = cond.power(b);
        // Hand-expanded: 0.041*0.25 + 0.144*0.5 + 0.047 and 0.012*0.25 + 0.046*0.5 + 0.056.
        let expect_fc = (0.041 * 0.25 + 0.144 * 0.5 + 0.047) * 625.0;
        let expect_fp = (0.012 * 0.25 + 0.046 * 0.5 + 0.056) * 625.0;
        assert!((fc - expect_fc).abs() < 1e-9);
        assert!((fp - expect_fp).abs() < 1e-9);
        assert!((fc - 80.78125).abs() < 1e-9);
        assert!((fp - 51.25).abs() < 1e-9);
        assert!((b + fp + fc - 444.53125).abs() < 1e-9);
    }

    #[test]
    fn regimes_follow_the_clock() {
        let c = preset_cooling(Region::SanJose, 100).unwrap();
        let names: Vec<&str> = [0, 7, 8, 19, 20, 23, 24, 32]
            .iter()
            .map(|&s| c.regimes()[c.regime_at(s)].name.as_str())
            .collect();
        assert_eq!(names, ["night", "night", "day", "day", "evening", "evening", "night", "day"]);
    }

    #[test]
    fn overlapping_regimes_rejected() {
        let q = Curve::Quadratic { q: 0.0, l: 0.1, c: 0.0 };
        let r = CoolingModel::new(
            1.0,
            4,
            vec![
                CoolingRegime { name: "a".into(), hours: 0..3, curve: q },
                CoolingRegime { name: "b".into(), hours: 2..4, curve: q },
            ],
        );
        assert!(r.is_err());
        let gap = CoolingModel::new(1.0, 4, vec![CoolingRegime { name: "a".into(), hours: 0..3, curve: q }]);
        assert!(gap.is_err());
    }

    #[test]
    fn mixed_kinds_and_negative_coefficients_rejected() {
        let r = CoolingModel::new(
            1.0,
            2,
            vec![
                CoolingRegime { name: "a".into(), hours: 0..1, curve: Curve::Cubic { k: 1.0 } },
                CoolingRegime { name: "b".into(), hours: 1..2, curve: Curve::Quadratic { q: 0.0, l: 0.0, c: 0.0 } },
            ],
        );
        assert!(r.is_err());
        let neg = CoolingModel::new(
            1.0,
            1,
            vec![CoolingRegime { name: "a".into(), hours: 0..1, curve: Curve::Cubic { k: -1.0 } }],
        );
        assert!(neg.is_err());
        assert!(ServerModel::new(0.3, 0.2, 0.0).is_err());
    }

    #[test]
    fn cubic_cooling_scales_with_b_max() {
        let c = CoolingModel::new(
            2.0,
            1,
            vec![CoolingRegime { name: "k".into(), hours: 0..1, curve: Curve::Cubic { k: 0.5 } }],
        )
        .unwrap();
        // b/b_max = 0.5 -> 0.5 * 0.125 * 2
        assert!((c.power(0, 1.0) - 0.125).abs() < 1e-15);
    }

    #[test]
    fn d_min_takes_cheapest_regime() {
        let server = ServerModel::new(0.1, 0.25, 0.08).unwrap();
        let pm = PowerModel::new(
            server,
            preset_cooling(Region::NewYork, 100).unwrap(),
            preset_conditioning(100).unwrap(),
        )
        .unwrap();
        let night = pm.demand(0, 1.0, 0.0) - pm.demand(0, 0.0, 0.0);
        let day = pm.demand(1, 1.0, 0.0) - pm.demand(1, 0.0, 0.0);
        assert!(night < day);
        assert_eq!(pm.d_min(), night);
    }
}
