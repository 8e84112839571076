//! Worst-case ratio guarantees of the online algorithms.

use crate::error::{Error, Result};
use crate::model::{break_even_interval, GeneratorModel};

use super::dcmon::ep_window;

fn check_economics(p_max: f64, gen: &GeneratorModel) -> Result<()> {
    if gen.full_load_unit_cost().partial_cmp(&p_max) != Some(std::cmp::Ordering::Less) {
        return Err(Error::model(format!(
            "bounds need c_o + c_m/L < P_max, got {} >= {}",
            gen.full_load_unit_cost(),
            p_max
        )));
    }
    Ok(())
}

/// `min(1, w * d_min * P_min / beta_s)`.
pub fn alpha_s(window: usize, beta_s: f64, d_min: f64, p_min: f64) -> f64 {
    let delta = break_even_interval(beta_s, d_min, p_min);
    if delta == 0.0 {
        return 1.0;
    }
    (window as f64 / delta).min(1.0)
}

/// Server-side online/offline ratio guarantee, `2 - alpha_s`.
pub fn ratio_bound_ongrid(window: usize, beta_s: f64, d_min: f64, p_min: f64) -> f64 {
    2.0 - alpha_s(window, beta_s, d_min, p_min)
}

/// Generator-side online/offline ratio guarantee with look-ahead `window`.
pub fn ratio_bound_chase(window: usize, p_max: f64, gen: &GeneratorModel) -> Result<f64> {
    check_economics(p_max, gen)?;
    if gen.beta_g == 0.0 {
        return Ok(1.0);
    }
    let (l, c_o, c_m, b) = (gen.capacity, gen.c_o, gen.c_m, gen.beta_g);
    let num = 2.0 * b * (l * p_max - l * c_o - c_m);
    let den = b * l * p_max + window as f64 * c_m * p_max * (l - c_m / (p_max - c_o));
    Ok(1.0 + num / den)
}

/// Parameters of the joint online guarantee.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridBoundParams {
    pub beta_s: f64,
    pub d_min: f64,
    pub p_min: f64,
    pub p_max: f64,
    pub gen: GeneratorModel,
}

/// Joint online/offline ratio guarantee with look-ahead `window`, using the
/// generator window the joint algorithm actually gets.
pub fn ratio_bound_hybrid(window: usize, b: &HybridBoundParams) -> Result<f64> {
    check_economics(b.p_max, &b.gen)?;
    let delta = break_even_interval(b.beta_s, b.d_min, b.p_min);
    let server = b.p_max * ratio_bound_ongrid(window, b.beta_s, b.d_min, b.p_min) / b.gen.full_load_unit_cost();
    Ok(server * ratio_bound_chase(ep_window(window, delta), b.p_max, &b.gen)?)
}

/// Looser closed form of the joint guarantee:
/// `(2 - alpha_s) P_max / (c_o + c_m/L) * (1 + 2 (P_max - c_o) / P_max)`
/// without generator look-ahead credit.
pub fn ratio_bound_hybrid_simple(window: usize, b: &HybridBoundParams) -> Result<f64> {
    check_economics(b.p_max, &b.gen)?;
    let server = b.p_max * ratio_bound_ongrid(window, b.beta_s, b.d_min, b.p_min) / b.gen.full_load_unit_cost();
    Ok(server * (1.0 + 2.0 * (b.p_max - b.gen.c_o) / b.p_max))
}

/// Price of decomposing the joint problem, `L P_max / (L c_o + c_m)`.
pub fn rho(p_max: f64, gen: &GeneratorModel) -> Result<f64> {
    check_economics(p_max, gen)?;
    Ok(gen.capacity * p_max / (gen.capacity * gen.c_o + gen.c_m))
}
