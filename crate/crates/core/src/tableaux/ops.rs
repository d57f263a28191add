//! The operators built from the toggles `τ_i`.
//!
//! Everything acts on the right: `t.fg` applies `f` first, then `g`.

use std::sync::Arc;

use super::shape::Shape;
use super::tableau::Tableau;
use crate::error::{Error, Result};

fn check_index(t: &Tableau, i: usize) -> Result<()> {
    if i == 0 || i >= t.size() {
        return Err(Error::IndexOutOfRange { index: i, max: t.size().saturating_sub(1) });
    }
    Ok(())
}

fn check_k(t: &Tableau, k: usize) -> Result<()> {
    if k == 0 || k > t.size() {
        return Err(Error::IndexOutOfRange { index: k, max: t.size() });
    }
    Ok(())
}

/// Swaps `i` and `i+1` when the result is still standard.
pub fn tau(t: &Tableau, i: usize) -> Result<Tableau> {
    check_index(t, i)?;
    let mut out = t.clone();
    out.toggle(i);
    Ok(out)
}

/// Applies `τ_{i_1}, τ_{i_2}, ..` in order.
pub fn apply_taus(t: &Tableau, seq: impl IntoIterator<Item = usize>) -> Tableau {
    let mut out = t.clone();
    for i in seq {
        out.toggle(i);
    }
    out
}

/// `∂_k = τ_k τ_{k+1} ⋯ τ_{N−1}`.
pub fn partial_promotion(t: &Tableau, k: usize) -> Result<Tableau> {
    check_k(t, k)?;
    Ok(apply_taus(t, k..t.size()))
}

/// `∂*_k = τ_{k−1} ⋯ τ_1`.
pub fn partial_inverse_promotion(t: &Tableau, k: usize) -> Result<Tableau> {
    check_k(t, k)?;
    Ok(apply_taus(t, (1..k).rev()))
}

/// Inverse of `∂_k`: `τ_{N−1} ⋯ τ_k`.
pub fn partial_promotion_inverse(t: &Tableau, k: usize) -> Result<Tableau> {
    check_k(t, k)?;
    Ok(apply_taus(t, (k..t.size()).rev()))
}

/// Inverse of `∂*_k`: `τ_1 ⋯ τ_{k−1}`.
pub fn partial_inverse_promotion_inverse(t: &Tableau, k: usize) -> Result<Tableau> {
    check_k(t, k)?;
    Ok(apply_taus(t, 1..k))
}

/// Full promotion `∂ = ∂_1`.
pub fn promotion(t: &Tableau) -> Tableau {
    apply_taus(t, 1..t.size())
}

/// Full inverse promotion `∂* = ∂*_N`.
pub fn inverse_promotion(t: &Tableau) -> Tableau {
    apply_taus(t, (1..t.size()).rev())
}

/// Promotion by sliding: drop 1, slide the smaller of the right and lower
/// neighbours into the hole, fill the last hole with `N+1` and decrement.
/// Also returns the cells visited by the hole.
pub fn promotion_jdt(t: &Tableau) -> (Tableau, Vec<usize>) {
    let shape = t.shape();
    let mut entries = t.entries().to_vec();
    let mut hole = t.cell_of(1);
    let mut path = vec![hole];
    loop {
        let next = [shape.right_of(hole), shape.below(hole)].into_iter().flatten().min_by_key(|&c| entries[c]);
        let Some(next) = next else { break };
        entries[hole] = entries[next];
        hole = next;
        path.push(hole);
    }
    entries[hole] = t.size() as u16 + 1;
    for v in entries.iter_mut() {
        *v -= 1;
    }
    (Tableau::from_parts_unchecked(t.shape_arc().clone(), entries), path)
}

/// Inverse promotion by sliding from the cell of `N` towards the top left.
/// The returned path starts at the cell of `N`.
pub fn inverse_promotion_jdt(t: &Tableau) -> (Tableau, Vec<usize>) {
    let shape = t.shape();
    let mut entries = t.entries().to_vec();
    let mut hole = t.cell_of(t.size());
    let mut path = vec![hole];
    loop {
        let next = [shape.left_of(hole), shape.above(hole)].into_iter().flatten().max_by_key(|&c| entries[c]);
        let Some(next) = next else { break };
        entries[hole] = entries[next];
        hole = next;
        path.push(hole);
    }
    entries[hole] = 0;
    for v in entries.iter_mut() {
        *v += 1;
    }
    (Tableau::from_parts_unchecked(t.shape_arc().clone(), entries), path)
}

/// `ε = (τ_1⋯τ_{N−1})(τ_1⋯τ_{N−2})⋯(τ_1)`.
pub fn evacuation(t: &Tableau) -> Tableau {
    let n = t.size();
    apply_taus(t, (1..n).rev().flat_map(|top| 1..=top))
}

/// `ε* = (τ_{N−1}⋯τ_1)(τ_{N−1}⋯τ_2)⋯(τ_{N−1})`.
pub fn dual_evacuation(t: &Tableau) -> Tableau {
    let n = t.size();
    apply_taus(t, (1..n).flat_map(move |low| (low..n).rev()))
}

/// Applies `τ_i` for every odd (or even) `i`; the toggles commute.
pub fn tau_parity(t: &Tableau, odd: bool) -> Tableau {
    let start = if odd { 1 } else { 2 };
    apply_taus(t, (start..t.size()).step_by(2))
}

/// Reflects in the anti-diagonal and replaces each entry `v` by `N+1−v`.
pub fn conjugate(t: &Tableau) -> Result<Tableau> {
    let shape = t.shape();
    let rows = shape.rows();
    let cols = shape.max_col();
    let n = t.size();
    // new row r' = C+1−c, new column c' = R+1−r
    let mut placed: Vec<Vec<(usize, u16)>> = vec![Vec::new(); cols];
    for (i, cell) in shape.cells().iter().enumerate() {
        let new_row = cols + 1 - cell.col;
        let new_col = rows + 1 - cell.row;
        placed[new_row - 1].push((new_col, (n + 1 - t.entry(i)) as u16));
    }
    let mut spans = Vec::with_capacity(cols);
    let mut entries = Vec::with_capacity(n);
    for row in placed.iter_mut() {
        row.sort_unstable();
        let (Some(first), Some(last)) = (row.first(), row.last()) else {
            return Err(Error::InvalidShape(format!("column gap in {shape}; conjugate is not a diagram")));
        };
        if last.0 + 1 - first.0 != row.len() {
            return Err(Error::InvalidShape(format!("a column of {shape} is not contiguous")));
        }
        spans.push((first.0, last.0));
        entries.extend(row.iter().map(|&(_, v)| v));
    }
    let shape = Shape::from_spans(spans)?;
    Tableau::from_entries(Arc::new(shape), entries)
}
