use crate::error::{Error, Result};

/// A fleet of identical on-site generators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorModel {
    /// Output capacity `L` of one generator per slot.
    pub capacity: f64,
    /// Incremental fuel cost `c_o` per unit of output.
    pub c_o: f64,
    /// Sunk running cost `c_m` per generator per slot.
    pub c_m: f64,
    /// Startup cost `beta_g` per generator.
    pub beta_g: f64,
    /// Number of generators `N`.
    pub count: u32,
}

impl GeneratorModel {
    pub fn new(capacity: f64, c_o: f64, c_m: f64, beta_g: f64, count: u32) -> Result<Self> {
        let g = GeneratorModel { capacity, c_o, c_m, beta_g, count };
        g.validate()?;
        Ok(g)
    }

    /// A model with no generators; grid-only operation.
    pub fn none() -> Self {
        GeneratorModel { capacity: 1.0, c_o: 0.0, c_m: 0.0, beta_g: 0.0, count: 0 }
    }

    pub fn validate(&self) -> Result<()> {
        let vals = [self.capacity, self.c_o, self.c_m, self.beta_g];
        if vals.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::model("generator parameters must be finite and non-negative"));
        }
        if self.capacity <= 0.0 {
            return Err(Error::model("generator capacity must be positive"));
        }
        Ok(())
    }

    /// Per-unit cost of on-site energy at full load, `c_o + c_m/L`.
    pub fn full_load_unit_cost(&self) -> f64 {
        self.c_o + self.c_m / self.capacity
    }

    pub fn with_count(mut self, count: u32) -> Self {
        self.count = count;
        self
    }
}

/// Cheapest cost of meeting demand `d` at price `p` with `y` generators running.
pub fn psi(y: u32, p: f64, d: f64, gen: &GeneratorModel) -> f64 {
    let y = f64::from(y);
    let fixed = gen.c_m * y;
    if p <= gen.c_o {
        return fixed + p * d;
    }
    let cap = gen.capacity * y;
    if d > cap {
        fixed + gen.c_o * cap + p * (d - cap)
    } else {
        fixed + gen.c_o * d
    }
}

/// Optimal energy split `(u, v)` between on-site output and grid.
pub fn dispatch(y: u32, p: f64, g: f64, gen: &GeneratorModel) -> (f64, f64) {
    let u = if p <= gen.c_o { 0.0 } else { (gen.capacity * f64::from(y)).min(g) };
    (u, g - u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen() -> GeneratorModel {
        GeneratorModel::new(60.0, 0.08, 1.2, 24.0, 10).unwrap()
    }

    #[test]
    fn psi_three_cases() {
        let g = gen();
        // cheap grid: pay c_m*y plus grid price
        assert!((psi(2, 0.05, 100.0, &g) - (2.4 + 5.0)).abs() < 1e-12);
        // demand above capacity
        assert!((psi(1, 0.2, 100.0, &g) - (1.2 + 0.08 * 60.0 + 0.2 * 40.0)).abs() < 1e-12);
        // capacity covers demand
        assert!((psi(2, 0.2, 100.0, &g) - (2.4 + 8.0)).abs() < 1e-12);
    }

    #[test]
    fn dispatch_example() {
        let (u, v) = dispatch(2, 0.12, 100.0, &gen());
        assert_eq!((u, v), (100.0, 0.0));
        let (u, v) = dispatch(1, 0.12, 100.0, &gen());
        assert_eq!((u, v), (60.0, 40.0));
        let (u, v) = dispatch(3, 0.08, 100.0, &gen());
        assert_eq!((u, v), (0.0, 100.0));
    }

    #[test]
    fn validation() {
        assert!(GeneratorModel::new(0.0, 0.08, 1.2, 24.0, 1).is_err());
        assert!(GeneratorModel::new(60.0, -0.1, 1.2, 24.0, 1).is_err());
        assert!((gen().full_load_unit_cost() - 0.1).abs() < 1e-15);
    }
}
