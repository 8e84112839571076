//! Power, generator and cost model.

mod generator;
mod instance;
mod power;
mod schedule;

pub use generator::{dispatch, psi, GeneratorModel};
pub use instance::Instance;
pub use power::{
    preset_b_max, preset_conditioning, preset_cooling, ConditioningModel, CoolingKind, CoolingModel, CoolingRegime,
    Curve, PowerModel, Region, ServerModel,
};
pub use schedule::{cp_cost, dcm_cost, ep_cost, evaluate, switching_cost, turn_ons, CostBreakdown, Schedule};

/// Break-even idle length `beta_s / (d_min * P_min)`, infinite when the denominator is zero.
pub fn break_even_interval(beta_s: f64, d_min: f64, p_min: f64) -> f64 {
    let rate = d_min * p_min;
    if rate <= 0.0 {
        f64::INFINITY
    } else {
        beta_s / rate
    }
}
