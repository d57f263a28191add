//! Sliding paths of promotion and inverse promotion and where they cross.

use serde::Serialize;

use super::ops::{inverse_promotion_jdt, promotion_jdt};
use super::shape::Cell;
use super::tableau::Tableau;

/// Cells visited by the hole of a jeu-de-taquin slide, ordered from the top
/// left to the bottom right. Stored as cell indices of the tableau's shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlidingPath {
    cells: Vec<usize>,
}

impl SlidingPath {
    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    pub fn contains(&self, cell: usize) -> bool {
        self.cells.contains(&cell)
    }

    /// `true` when the path moves from `a` directly to `b`.
    pub fn has_step(&self, a: usize, b: usize) -> bool {
        self.cells.windows(2).any(|w| w[0] == a && w[1] == b)
    }

    pub fn first(&self) -> usize {
        self.cells[0]
    }

    pub fn last(&self) -> usize {
        *self.cells.last().expect("paths are never empty")
    }

    /// Entries of `t` along the path.
    pub fn entries(&self, t: &Tableau) -> Vec<usize> {
        self.cells.iter().map(|&c| t.entry(c)).collect()
    }

    pub fn positions(&self, t: &Tableau) -> Vec<Cell> {
        self.cells.iter().map(|&c| t.shape().cell(c)).collect()
    }
}

/// The promotion path `𝓛`, starting at the cell of 1.
pub fn promotion_path(t: &Tableau) -> SlidingPath {
    SlidingPath { cells: promotion_jdt(t).1 }
}

/// The inverse promotion path `𝓡`, ending at the cell of `N`.
pub fn inverse_promotion_path(t: &Tableau) -> SlidingPath {
    let mut cells = inverse_promotion_jdt(t).1;
    cells.reverse();
    SlidingPath { cells }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum CrossingDirection {
    /// From `𝓡` above `𝓛` to `𝓛` above `𝓡`, at a left inner corner.
    #[serde(rename = "r-to-l")]
    RtoL,
    /// The reverse, at a jagged upper right corner of a skew shape.
    #[serde(rename = "l-to-r")]
    LtoR,
}

/// A crossing of the two paths at the cell holding `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Crossing {
    pub cell: Cell,
    pub k: usize,
    /// Entry where `𝓛` arrives from.
    pub x: usize,
    /// Entry where `𝓡` leaves to.
    pub y: usize,
    pub direction: CrossingDirection,
}

/// All crossings of `𝓛` and `𝓡`, found by matching the local configurations
///
/// ```text
///   x k        x .
///   . y        k y
/// ```
///
/// On the left `𝓛` enters `k` from `x` and `𝓡` leaves `k` towards `y`, with no
/// cell below `x`. On the right (rotated) `𝓛` enters `k` from `x` above it, `𝓡`
/// leaves to `y` on its right, and there is no cell right of `x`.
pub fn crossings(t: &Tableau) -> Vec<Crossing> {
    let l = promotion_path(t);
    let r = inverse_promotion_path(t);
    crossings_of(t, &l, &r)
}

pub(crate) fn crossings_of(t: &Tableau, l: &SlidingPath, r: &SlidingPath) -> Vec<Crossing> {
    let shape = t.shape();
    let mut out = Vec::new();
    for w in l.cells.windows(2) {
        let (x, c) = (w[0], w[1]);
        let found = if shape.right_of(x) == Some(c) && shape.below(x).is_none() {
            shape.below(c).map(|y| (y, CrossingDirection::RtoL))
        } else if shape.below(x) == Some(c) && shape.right_of(x).is_none() {
            shape.right_of(c).map(|y| (y, CrossingDirection::LtoR))
        } else {
            None
        };
        if let Some((y, direction)) = found {
            if r.has_step(c, y) {
                out.push(Crossing { cell: shape.cell(c), k: t.entry(c), x: t.entry(x), y: t.entry(y), direction });
            }
        }
    }
    out
}

/// Which side of the commuting square a partial hook lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

/// Partial braid hooks, sorted.
///
/// `Left`: `𝓛` runs `x → k → k+1` with `x` left of `k`, `k+1` below `k` and no
/// cell below `x`. `Right`: `𝓡` runs `k−1 → k → y` with `k−1` left of `k`, `y`
/// below `k` and no cell below `k−1`.
pub fn partial_braid_hooks(t: &Tableau, side: Side) -> Vec<usize> {
    let shape = t.shape();
    let path = match side {
        Side::Left => promotion_path(t),
        Side::Right => inverse_promotion_path(t),
    };
    let mut out = Vec::new();
    for w in path.cells.windows(3) {
        let (a, c, b) = (w[0], w[1], w[2]);
        if shape.right_of(a) == Some(c) && shape.below(c) == Some(b) && shape.below(a).is_none() {
            let k = t.entry(c);
            let ok = match side {
                Side::Left => t.entry(b) == k + 1,
                Side::Right => t.entry(a) + 1 == k,
            };
            if ok {
                out.push(k);
            }
        }
    }
    out.sort_unstable();
    out
}
