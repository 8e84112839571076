//! Online algorithms with a bounded look-ahead window.

mod bounds;
mod chase;
mod dcmon;
mod gcsr;
mod stream;

pub use bounds::{
    alpha_s, ratio_bound_chase, ratio_bound_hybrid, ratio_bound_hybrid_simple, ratio_bound_ongrid, rho,
    HybridBoundParams,
};
pub use chase::{chase, chase_slice, ChaseFleet, ChaseSlice};
pub use dcmon::{a_priori_break_even, dcmon, dcmon_with, ep_window};
pub use gcsr::{gcsr, gcsr_slice, GcsrFleet, SliceState};
pub use stream::{LookaheadStream, SlotView};
