//! JSON run configuration. Unknown keys are rejected; omitted keys take the
//! defaults of the reference setup (2500-server scale coefficients,
//! generators of 60 kW).

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{
    preset_conditioning, preset_cooling, ConditioningModel, CoolingModel, CoolingRegime, Curve, GeneratorModel,
    Instance, PowerModel, Region, ServerModel,
};
use crate::offline::{OfflineOptions, PathMethod, DEFAULT_STATE_BUDGET};

use super::synth::{SynthSpec, TracePreset};
use super::trace::Trace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Offline,
    Bruteforce,
    Gcsr,
    Chase,
    Dcmon,
    Static,
    Cpoff,
    Ofa,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Offline,
        Algorithm::Bruteforce,
        Algorithm::Gcsr,
        Algorithm::Chase,
        Algorithm::Dcmon,
        Algorithm::Static,
        Algorithm::Cpoff,
        Algorithm::Ofa,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Offline => "offline",
            Algorithm::Bruteforce => "bruteforce",
            Algorithm::Gcsr => "gcsr",
            Algorithm::Chase => "chase",
            Algorithm::Dcmon => "dcmon",
            Algorithm::Static => "static",
            Algorithm::Cpoff => "cpoff",
            Algorithm::Ofa => "ofa",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown algorithm '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    #[default]
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format '{s}', expected csv or json"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ServerConfig {
    pub c_idle: f64,
    pub c_peak: f64,
    pub beta_s: f64,
}

impl Default for ServerConfig {
    fn default() -> Self {
        ServerConfig { c_idle: 0.1, c_peak: 0.25, beta_s: 0.08 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GeneratorConfig {
    pub capacity: f64,
    pub c_o: f64,
    pub c_m: f64,
    pub beta_g: f64,
    pub count: u32,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { capacity: 60.0, c_o: 0.08, c_m: 1.2, beta_g: 24.0, count: 10 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegimeConfig {
    pub name: String,
    pub start: usize,
    pub end: usize,
    #[serde(default)]
    pub q: f64,
    #[serde(default)]
    pub l: f64,
    #[serde(default)]
    pub c: f64,
    #[serde(default)]
    pub k: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CoolingConfig {
    None,
    /// Regional preset; `servers` sets the normalization, defaulting to the trace peak.
    Preset {
        region: String,
        #[serde(default)]
        servers: Option<u32>,
    },
    Quadratic {
        b_max: f64,
        period: usize,
        regimes: Vec<RegimeConfig>,
    },
    Cubic {
        b_max: f64,
        period: usize,
        regimes: Vec<RegimeConfig>,
    },
}

impl Default for CoolingConfig {
    fn default() -> Self {
        CoolingConfig::Preset { region: "ny".into(), servers: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConditioningConfig {
    None,
    Preset {
        #[serde(default)]
        servers: Option<u32>,
    },
    Quadratic {
        b_max: f64,
        c2: f64,
        c1: f64,
        c0: f64,
    },
}

impl Default for ConditioningConfig {
    fn default() -> Self {
        ConditioningConfig::Preset { servers: None }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SynthConfig {
    pub days: usize,
    pub servers: u32,
    pub preset: String,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig { days: 22, servers: 400, preset: "ny".into() }
    }
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub lookahead: Vec<usize>,
    pub generators: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputConfig {
    pub path: Option<String>,
    pub format: Format,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub server: ServerConfig,
    pub generator: GeneratorConfig,
    pub cooling: CoolingConfig,
    pub conditioning: ConditioningConfig,
    pub algorithm: Algorithm,
    pub lookahead: usize,
    pub state_budget: u64,
    pub dijkstra: bool,
    pub seed: u64,
    pub synth: Option<SynthConfig>,
    pub sweep: SweepConfig,
    pub output: OutputConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            server: ServerConfig::default(),
            generator: GeneratorConfig::default(),
            cooling: CoolingConfig::default(),
            conditioning: ConditioningConfig::default(),
            algorithm: Algorithm::Dcmon,
            lookahead: 0,
            state_budget: DEFAULT_STATE_BUDGET,
            dijkstra: false,
            seed: 1,
            synth: None,
            sweep: SweepConfig::default(),
            output: OutputConfig::default(),
        }
    }
}

fn regimes(list: &[RegimeConfig], cubic: bool) -> Vec<CoolingRegime> {
    list.iter()
        .map(|r| CoolingRegime {
            name: r.name.clone(),
            hours: r.start..r.end,
            curve: if cubic { Curve::Cubic { k: r.k } } else { Curve::Quadratic { q: r.q, l: r.l, c: r.c } },
        })
        .collect()
}

fn region(name: &str) -> Result<Region> {
    Region::parse(name).ok_or_else(|| Error::Config(format!("unknown region '{name}', expected ny or sj")))
}

impl RunConfig {
    pub fn from_json(src: &str) -> Result<Self> {
        let cfg: RunConfig = serde_json::from_str(src).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Checks everything that does not depend on the trace.
    pub fn validate(&self) -> Result<()> {
        self.server_model()?;
        self.generator_model()?;
        if let Some(s) = &self.synth {
            TracePreset::parse(&s.preset)?;
            if s.days == 0 || s.servers == 0 {
                return Err(Error::Config("synth needs days and servers above zero".into()));
            }
        }
        if let CoolingConfig::Preset { region: r, .. } = &self.cooling {
            region(r)?;
        }
        self.power_model(1)?;
        Ok(())
    }

    pub fn server_model(&self) -> Result<ServerModel> {
        ServerModel::new(self.server.c_idle, self.server.c_peak, self.server.beta_s)
    }

    pub fn generator_model(&self) -> Result<GeneratorModel> {
        let g = &self.generator;
        GeneratorModel::new(g.capacity, g.c_o, g.c_m, g.beta_g, g.count)
    }

    /// Power model; presets without an explicit server count use `peak_servers`.
    pub fn power_model(&self, peak_servers: u32) -> Result<PowerModel> {
        let peak = peak_servers.max(1);
        let cooling = match &self.cooling {
            CoolingConfig::None => CoolingModel::none(),
            CoolingConfig::Preset { region: r, servers } => preset_cooling(region(r)?, servers.unwrap_or(peak))?,
            CoolingConfig::Quadratic { b_max, period, regimes: r } => {
                CoolingModel::new(*b_max, *period, regimes(r, false))?
            }
            CoolingConfig::Cubic { b_max, period, regimes: r } => CoolingModel::new(*b_max, *period, regimes(r, true))?,
        };
        let conditioning = match &self.conditioning {
            ConditioningConfig::None => ConditioningModel::None,
            ConditioningConfig::Preset { servers } => preset_conditioning(servers.unwrap_or(peak))?,
            ConditioningConfig::Quadratic { b_max, c2, c1, c0 } => ConditioningModel::quadratic(*b_max, *c2, *c1, *c0)?,
        };
        PowerModel::new(self.server_model()?, cooling, conditioning)
    }

    pub fn instance(&self, trace: &Trace) -> Result<Instance> {
        let peak = match &self.synth {
            Some(s) => s.servers,
            None => trace.peak_servers(),
        };
        trace.to_instance(self.power_model(peak)?, self.generator_model()?)
    }

    pub fn synth_spec(&self) -> Result<Option<SynthSpec>> {
        self.synth
            .as_ref()
            .map(|s| {
                Ok(SynthSpec { seed: self.seed, days: s.days, servers: s.servers, preset: TracePreset::parse(&s.preset)? })
            })
            .transpose()
    }

    pub fn offline_options(&self) -> OfflineOptions {
        OfflineOptions {
            state_budget: self.state_budget,
            method: if self.dijkstra { PathMethod::Dijkstra } else { PathMethod::Layered },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_parse() {
        let c = RunConfig::from_json("{}").unwrap();
        assert_eq!(c, RunConfig::default());
        assert_eq!(c.generator.count, 10);
        assert_eq!(c.server.beta_s, 0.08);
    }

    #[test]
    fn unknown_keys_rejected() {
        let err = RunConfig::from_json(r#"{"lookahed": 3}"#).unwrap_err();
        assert!(err.to_string().contains("lookahed"), "{err}");
        let err = RunConfig::from_json(r#"{"server": {"c_idle": 0.1, "speed": 2}}"#).unwrap_err();
        assert!(err.to_string().contains("speed"), "{err}");
    }

    #[test]
    fn invalid_values_rejected() {
        assert!(RunConfig::from_json(r#"{"server": {"c_idle": 0.3, "c_peak": 0.2}}"#).is_err());
        assert!(RunConfig::from_json(r#"{"cooling": {"kind": "preset", "region": "mars"}}"#).is_err());
        assert!(RunConfig::from_json(r#"{"algorithm": "magic"}"#).is_err());
    }

    #[test]
    fn custom_cooling() {
        let src = r#"{"cooling": {"kind": "quadratic", "b_max": 10, "period": 2,
            "regimes": [{"name": "a", "start": 0, "end": 1, "q": 0.1, "l": 0.2, "c": 0.0},
                        {"name": "b", "start": 1, "end": 2, "l": 0.3}]}}"#;
        let c = RunConfig::from_json(src).unwrap();
        let pm = c.power_model(5).unwrap();
        assert_eq!(pm.cooling.regime_count(), 2);
    }
}
