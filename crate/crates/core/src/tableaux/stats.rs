//! Braid hooks and their averages.

use std::sync::Arc;

use serde::Serialize;

use super::paths::{crossings, CrossingDirection};
use super::shape::{Justification, Shape};
use super::tableau::{visit_tableaux, Tableau};
use crate::error::{Error, Result};
use crate::fraction::{self, Fraction};

/// All `k` with `k−1` immediately left of `k`, `k+1` directly below `k`,
/// and no cell below `k−1`.
pub fn braid_hooks(t: &Tableau) -> Vec<usize> {
    let shape = t.shape();
    (2..t.size())
        .filter(|&k| {
            let (a, c, b) = (t.cell_of(k - 1), t.cell_of(k), t.cell_of(k + 1));
            shape.right_of(a) == Some(c) && shape.below(c) == Some(b) && shape.below(a).is_none()
        })
        .collect()
}

pub fn is_braid_hook(t: &Tableau, k: usize) -> bool {
    if k < 2 || k + 1 > t.size() {
        return false;
    }
    let shape = t.shape();
    let (a, c, b) = (t.cell_of(k - 1), t.cell_of(k), t.cell_of(k + 1));
    shape.right_of(a) == Some(c) && shape.below(c) == Some(b) && shape.below(a).is_none()
}

/// The mirrored hooks: `k−1` directly above `k`, `k+1` right of `k`, and no
/// cell right of `k−1`. These only occur along a jagged upper right boundary.
pub fn down_hooks(t: &Tableau) -> Vec<usize> {
    let shape = t.shape();
    (2..t.size())
        .filter(|&k| {
            let (a, c, b) = (t.cell_of(k - 1), t.cell_of(k), t.cell_of(k + 1));
            shape.below(a) == Some(c) && shape.right_of(c) == Some(b) && shape.right_of(a).is_none()
        })
        .collect()
}

/// Totals of the braid-hook statistic over every filling of a shape.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HookTally {
    pub tableaux: u64,
    pub hooks: u64,
    #[serde(serialize_with = "fraction::serialize")]
    pub expected: Fraction,
}

pub fn hook_tally(shape: &Arc<Shape>) -> HookTally {
    let mut hooks = 0u64;
    let tableaux = visit_tableaux(shape, |t| hooks += braid_hooks(t).len() as u64);
    HookTally { tableaux, hooks, expected: fraction::mean(hooks as i64, tableaux as usize) }
}

/// Exact average number of braid hooks over all fillings.
pub fn expected_braid_hooks(shape: &Arc<Shape>) -> Fraction {
    hook_tally(shape).expected
}

/// Signed crossing count of one tableau: `#RtoL − #LtoR`.
pub fn crossing_difference(t: &Tableau) -> i64 {
    crossings(t)
        .iter()
        .map(|c| match c.direction {
            CrossingDirection::RtoL => 1,
            CrossingDirection::LtoR => -1,
        })
        .sum()
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossingBalance {
    /// `(row-reading entries, RtoL count, LtoR count)` per tableau.
    pub per_tableau: Vec<(Vec<u16>, usize, usize)>,
    pub all_diffs_one: bool,
}

/// Crossing counts for every filling of a connected skew shape with
/// `λ_1 > λ_2` and `λ_ℓ = 1`.
pub fn updown_crossing_balance(shape: &Arc<Shape>) -> Result<CrossingBalance> {
    if !matches!(shape.mode(), Justification::SkewRight | Justification::Right) {
        return Err(Error::ShapeConditionViolated(format!("{shape} is not skew right-justified")));
    }
    if !shape.is_connected() {
        return Err(Error::DisconnectedShape);
    }
    if !shape.has_hook_condition() {
        return Err(Error::ShapeConditionViolated(format!("{shape} needs λ1 > λ2 and λℓ = 1")));
    }
    let mut per_tableau = Vec::new();
    let mut all = true;
    visit_tableaux(shape, |t| {
        let c = crossings(t);
        let rl = c.iter().filter(|c| c.direction == CrossingDirection::RtoL).count();
        let lr = c.len() - rl;
        all &= rl == lr + 1;
        per_tableau.push((t.entries().to_vec(), rl, lr));
    });
    per_tableau.sort();
    Ok(CrossingBalance { per_tableau, all_diffs_one: all })
}
