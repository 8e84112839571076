use std::fmt;

use thiserror::Error;

/// Which schedule constraint a feasibility check tripped on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// Fewer servers than the workload needs.
    ServerCapacity,
    /// More generators than the fleet owns.
    GeneratorCount,
    /// On-site output above the running generators' capacity.
    GeneratorCapacity,
    /// Grid plus on-site supply short of demand.
    Balance,
    /// Negative energy flow.
    NonNegative,
    /// Series length differs from the horizon.
    Length,
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Constraint::ServerCapacity => "x(t) >= ceil(a(t))",
            Constraint::GeneratorCount => "y(t) <= N",
            Constraint::GeneratorCapacity => "u(t) <= L*y(t)",
            Constraint::Balance => "u(t) + v(t) >= g_t(x(t), a(t))",
            Constraint::NonNegative => "u(t), v(t) >= 0",
            Constraint::Length => "series length equals T",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("infeasible schedule at slot {slot}: {constraint}")]
    Infeasible { slot: usize, constraint: Constraint },

    #[error("state graph needs {nodes} nodes, budget is {budget}; use the decomposed solver or raise the budget")]
    StateBudget { nodes: u128, budget: u128 },

    #[error("brute force needs {leaves} leaves, budget is {budget}")]
    EnumerationBudget { leaves: f64, budget: f64 },

    #[error("look-ahead violation: slot {requested} requested while only slots up to {limit} are revealed")]
    WindowViolation { requested: usize, limit: usize },

    #[error("trace error at line {line}: {message}")]
    Trace { line: u64, message: String },

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for errors caused by a size budget rather than bad input.
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::StateBudget { .. } | Error::EnumerationBudget { .. })
    }

    pub(crate) fn model(msg: impl Into<String>) -> Self {
        Error::InvalidModel(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
