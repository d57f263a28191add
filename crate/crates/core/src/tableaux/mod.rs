//! Standard fillings of justified diagrams and the operators acting on them.

pub mod bijections;
pub mod ops;
pub mod paths;
pub mod shape;
pub mod stats;
pub mod tableau;

pub use bijections::{phi, phi_inverse, psi, psi_inverse, staircase_pair};
pub use ops::{
    apply_taus, conjugate, dual_evacuation, evacuation, inverse_promotion, inverse_promotion_jdt,
    partial_inverse_promotion, partial_promotion, promotion, promotion_jdt, tau, tau_parity,
};
pub use paths::{
    crossings, inverse_promotion_path, partial_braid_hooks, promotion_path, Crossing, CrossingDirection, Side,
    SlidingPath,
};
pub use shape::{partitions, strict_partitions, Cell, Justification, Shape};
pub use stats::{
    braid_hooks, crossing_difference, down_hooks, expected_braid_hooks, hook_tally, is_braid_hook,
    updown_crossing_balance, CrossingBalance, HookTally,
};
pub use tableau::{count_tableaux, enumerate, enumerate_capped, try_visit_tableaux, visit_tableaux, Tableau};
