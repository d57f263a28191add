//! The maps `φ`, `ψ` and the staircase pair.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::ops::{
    conjugate, evacuation, partial_inverse_promotion, partial_inverse_promotion_inverse, partial_promotion,
    partial_promotion_inverse,
};
use super::paths::{crossings, CrossingDirection};
use super::shape::{Justification, Shape};
use super::stats::is_braid_hook;
use super::tableau::Tableau;
use crate::error::{Error, Result};

/// `t.∂*_k ∂_k` for a braid hook `k` of `t`; shared by `φ` and `ψ`.
fn hook_image(k: usize, t: &Tableau) -> Result<Tableau> {
    if !is_braid_hook(t, k) {
        return Err(Error::NotABraidHook { k });
    }
    partial_promotion(&partial_inverse_promotion(t, k)?, k)
}

/// Undoes [`hook_image`]: `t.∂_k⁻¹ ∂*_k⁻¹`.
fn hook_preimage(k: usize, t: &Tableau) -> Result<Tableau> {
    partial_inverse_promotion_inverse(&partial_promotion_inverse(t, k)?, k)
}

/// `φ(k, t) = t.∂*_k ∂_k` on right-justified tableaux.
pub fn phi(k: usize, t: &Tableau) -> Result<Tableau> {
    hook_image(k, t)
}

/// The unique `(k, t′)` with `φ(k, t′) = t`, read off from the crossing of
/// the two sliding paths. Needs a right-justified shape with `λ_1 > λ_2`
/// and `λ_ℓ = 1`.
pub fn phi_inverse(t: &Tableau) -> Result<(usize, Tableau)> {
    let shape = t.shape();
    if shape.mode() != Justification::Right || !shape.has_hook_condition() || shape.size() < 3 {
        return Err(Error::ShapeConditionViolated(format!("{shape} needs right justification, λ1 > λ2 and λℓ = 1")));
    }
    let found: Vec<usize> =
        crossings(t).iter().filter(|c| c.direction == CrossingDirection::RtoL).map(|c| c.k).collect();
    let [k] = found[..] else {
        return Err(Error::NoPreimage);
    };
    let pre = hook_preimage(k, t)?;
    if !is_braid_hook(&pre, k) {
        return Err(Error::NoPreimage);
    }
    Ok((k, pre))
}

/// `ψ(k, t) = t.∂*_k ∂_k` on half-right-justified tableaux.
pub fn psi(k: usize, t: &Tableau) -> Result<Tableau> {
    hook_image(k, t)
}

/// Inverse of `ψ` on its image: `None` when the paths of `t` do not cross.
pub fn psi_inverse(t: &Tableau) -> Option<(usize, Tableau)> {
    let c = crossings(t);
    let first = c.iter().find(|c| c.direction == CrossingDirection::RtoL)?;
    let pre = hook_preimage(first.k, t).ok()?;
    is_braid_hook(&pre, first.k).then_some((first.k, pre))
}

/// The right-justified tableau made of `t` and `(t.ε)†` shifted by `N`,
/// with the top cell of the conjugate just right of the end of `t`'s first row.
pub fn staircase_pair(t: &Tableau) -> Result<Tableau> {
    let n = t.size();
    let other = conjugate(&evacuation(t))?;
    let offset = t.shape().spans()[0].1 + 1 - other.shape().spans()[0].0;
    let mut cells: BTreeMap<(usize, usize), u16> = BTreeMap::new();
    for (i, c) in t.shape().cells().iter().enumerate() {
        cells.insert((c.row, c.col), t.entry(i) as u16);
    }
    for (i, c) in other.shape().cells().iter().enumerate() {
        if cells.insert((c.row, c.col + offset), (other.entry(i) + n) as u16).is_some() {
            return Err(Error::InvalidShape("the two halves of the staircase pair overlap".into()));
        }
    }
    let mut spans: Vec<(usize, usize)> = Vec::new();
    let mut entries = Vec::with_capacity(cells.len());
    for (&(row, col), &v) in &cells {
        if spans.len() < row {
            if spans.len() + 1 != row {
                return Err(Error::InvalidShape("staircase pair skips a row".into()));
            }
            spans.push((col, col));
        } else {
            let span = &mut spans[row - 1];
            if span.1 + 1 != col {
                return Err(Error::InvalidShape(format!("row {row} of the staircase pair has a gap")));
            }
            span.1 = col;
        }
        entries.push(v);
    }
    let shape = Shape::from_spans(spans)?;
    Tableau::from_entries(Arc::new(shape), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::stats::braid_hooks;

    fn tab(notation: &str, rows: &[&[u16]]) -> Tableau {
        let rows: Vec<Vec<u16>> = rows.iter().map(|r| r.to_vec()).collect();
        Tableau::from_rows(Arc::new(Shape::parse(notation).unwrap()), &rows).unwrap()
    }

    #[test]
    fn worked_phi_example() {
        let t = tab(
            "right:6,5,4,3,2,1",
            &[&[1, 2, 4, 6, 10, 12], &[3, 5, 7, 11, 13], &[8, 9, 14, 17], &[15, 16, 18], &[19, 20], &[21]],
        );
        let t_prime = tab(
            "right:6,5,4,3,2,1",
            &[&[1, 2, 3, 7, 11, 13], &[4, 5, 8, 12, 14], &[6, 9, 15, 18], &[10, 16, 19], &[17, 20], &[21]],
        );
        assert_eq!(phi_inverse(&t).unwrap(), (5, t_prime.clone()));
        assert_eq!(phi(5, &t_prime).unwrap(), t);
        let t_l = partial_inverse_promotion(&t_prime, 5).unwrap();
        let t_r = partial_promotion(&t_prime, 5).unwrap();
        assert_eq!(
            t_l.rows(),
            vec![
                vec![1, 2, 4, 7, 11, 13],
                vec![3, 5, 8, 12, 14],
                vec![6, 9, 15, 18],
                vec![10, 16, 19],
                vec![17, 20],
                vec![21]
            ]
        );
        assert_eq!(
            t_r.rows(),
            vec![
                vec![1, 2, 3, 6, 10, 12],
                vec![4, 5, 7, 11, 13],
                vec![8, 9, 14, 17],
                vec![15, 16, 18],
                vec![19, 20],
                vec![21]
            ]
        );
        assert_eq!(crate::tableaux::ops::promotion(&t_l), t_r);
        assert!(braid_hooks(&t_prime).contains(&5));
    }

    #[test]
    fn phi_rejects_bad_input() {
        let t = tab("right:2,2", &[&[1, 2], &[3, 4]]);
        assert!(matches!(phi_inverse(&t), Err(Error::ShapeConditionViolated(_))));
        let u = tab("right:5,2,1", &[&[1, 2, 3, 4, 5], &[6, 7], &[8]]);
        assert!(matches!(phi(2, &u), Err(Error::NotABraidHook { k: 2 })));
    }

    #[test]
    fn staircase_pair_example() {
        let t = tab("half:5,3,1", &[&[1, 2, 3, 4, 9], &[5, 6, 8], &[7]]);
        let pair = staircase_pair(&t).unwrap();
        assert_eq!(
            pair.rows(),
            vec![vec![1, 2, 3, 4, 9, 13], vec![5, 6, 8, 10, 15], vec![7, 11, 12, 16], vec![14, 17], vec![18]]
        );
        assert_eq!(pair.shape().mode(), Justification::Right);
    }
}
