//! Heap posets of words and their correspondence with justified tableaux.
//!
//! Letter positions label the heap: the piece dropped for position `p` is
//! element `p`, and `p` lies below `q` whenever `p < q` and the two letters
//! differ by at most one. A tableau cell on diagonal `col − row = d` plays
//! the piece of letter `d − d_min + 1`, so reading the letters of the cells
//! of `1, 2, .., N` gives back the word.

use std::sync::Arc;

use serde_json::json;

use crate::error::{Error, Result};
use crate::tableaux::{Shape, Tableau};
use crate::words::{commutation_class_capped, Word, DEFAULT_CAP};

/// A poset whose elements carry a column (generator index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeapPoset {
    columns: Vec<u8>,
    /// 1-based stack position within the column.
    heights: Vec<usize>,
    covers: Vec<(usize, usize)>,
}

/// Column-and-height key identifying an element independently of labels.
pub type ElementKey = (u8, usize);

impl HeapPoset {
    fn new(columns: Vec<u8>, heights: Vec<usize>, mut covers: Vec<(usize, usize)>) -> HeapPoset {
        covers.sort_unstable();
        HeapPoset { columns, heights, covers }
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn column(&self, element: usize) -> u8 {
        self.columns[element]
    }

    pub fn height(&self, element: usize) -> usize {
        self.heights[element]
    }

    pub fn key(&self, element: usize) -> ElementKey {
        (self.columns[element], self.heights[element])
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements sorted by key, with covers rewritten in terms of keys.
    /// Two heaps are isomorphic as column-labelled posets iff these agree.
    pub fn canonical_form(&self) -> (Vec<ElementKey>, Vec<(ElementKey, ElementKey)>) {
        let mut keys: Vec<ElementKey> = (0..self.len()).map(|e| self.key(e)).collect();
        keys.sort_unstable();
        let mut covers: Vec<(ElementKey, ElementKey)> =
            self.covers.iter().map(|&(a, b)| (self.key(a), self.key(b))).collect();
        covers.sort_unstable();
        (keys, covers)
    }

    pub fn is_isomorphic(&self, other: &HeapPoset) -> bool {
        self.canonical_form() == other.canonical_form()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "elements": (0..self.len()).map(|e| json!({"id": e, "column": self.columns[e]})).collect::<Vec<_>>(),
            "covers": self.covers.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}

/// Transitive reduction of the order generated by `related(p, q)` for `p < q`.
fn reduce(n: usize, related: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    // below[q][p]: p < q in the generated order
    let mut below = vec![vec![false; n]; n];
    for q in 0..n {
        for p in 0..q {
            if related(p, q) {
                below[q][p] = true;
                let (head, tail) = below.split_at_mut(q);
                for (r, flag) in head[p].iter().enumerate() {
                    if *flag {
                        tail[0][r] = true;
                    }
                }
            }
        }
    }
    let mut covers = Vec::new();
    for q in 0..n {
        for p in 0..q {
            if related(p, q) && !(p + 1..q).any(|r| below[q][r] && below[r][p]) {
                covers.push((p, q));
            }
        }
    }
    covers
}

/// The heap of a word: element `p` is the piece of the `p`-th letter.
pub fn heap_poset(w: &Word) -> HeapPoset {
    let letters = w.letters();
    let n = letters.len();
    let mut seen = vec![0usize; w.rank() + 1];
    let heights = letters
        .iter()
        .map(|&a| {
            seen[a as usize] += 1;
            seen[a as usize]
        })
        .collect();
    let covers = reduce(n, |p, q| letters[p].abs_diff(letters[q]) <= 1);
    HeapPoset::new(letters.to_vec(), heights, covers)
}

/// Labels of the heap elements in the order the word builds them, keyed by
/// element so that different words of one class can be compared.
pub fn build_order_extension(w: &Word) -> Vec<(ElementKey, usize)> {
    let heap = heap_poset(w);
    let mut labels: Vec<(ElementKey, usize)> = (0..heap.len()).map(|e| (heap.key(e), e + 1)).collect();
    labels.sort_unstable();
    labels
}

fn diagonal_offset(shape: &Shape) -> i64 {
    (0..shape.size()).map(|i| shape.diagonal(i)).min().unwrap_or(0)
}

/// Letter played by each cell.
pub fn cell_letters(shape: &Shape) -> Vec<u8> {
    let low = diagonal_offset(shape);
    (0..shape.size()).map(|i| (shape.diagonal(i) - low + 1) as u8).collect()
}

/// Rank of the symmetric group whose generators label the diagonals.
pub fn shape_rank(shape: &Shape) -> usize {
    cell_letters(shape).into_iter().max().unwrap_or(0) as usize + 1
}

/// The cell poset: each cell is covered by its right and lower neighbours.
/// Elements are cell indices; columns are the diagonal letters.
pub fn shape_poset(shape: &Shape) -> HeapPoset {
    let columns = cell_letters(shape);
    let n = shape.size();
    let mut heights = vec![0; n];
    // cells on one diagonal are stacked top to bottom
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (columns[i], shape.cell(i).row));
    let mut last: Option<u8> = None;
    let mut h = 0;
    for &i in &order {
        if last != Some(columns[i]) {
            h = 0;
            last = Some(columns[i]);
        }
        h += 1;
        heights[i] = h;
    }
    let mut covers = Vec::new();
    for i in 0..n {
        for j in [shape.right_of(i), shape.below(i)].into_iter().flatten() {
            covers.push((i, j));
        }
    }
    HeapPoset::new(columns, heights, covers)
}

/// The tableau labelling each cell by the position of its piece in `w`.
pub fn nu(w: &Word, shape: &Arc<Shape>) -> Result<Tableau> {
    let heap = heap_poset(w);
    let cells = shape_poset(shape);
    if !heap.is_isomorphic(&cells) {
        return Err(Error::ShapeMismatch(format!("heap of {w} is not the cell poset of {shape}")));
    }
    let mut by_key = vec![0u16; shape.size()];
    let mut index: Vec<(ElementKey, usize)> = (0..cells.len()).map(|c| (cells.key(c), c)).collect();
    index.sort_unstable();
    for p in 0..heap.len() {
        let slot = index.binary_search_by_key(&heap.key(p), |e| e.0).expect("isomorphic heaps share keys");
        by_key[index[slot].1] = (p + 1) as u16;
    }
    Tableau::from_entries(shape.clone(), by_key)
}

/// Reads the letters of the cells of `1, 2, .., N`.
pub fn nu_inverse(t: &Tableau) -> Word {
    let letters = cell_letters(t.shape());
    let word: Vec<u8> = (1..=t.size()).map(|v| letters[t.cell_of(v)]).collect();
    Word::new(word, shape_rank(t.shape())).expect("adjacent cells of a tableau never share a diagonal")
}

/// The commutation class attached to a shape: all words read from its fillings.
pub fn shape_class(shape: &Arc<Shape>) -> Result<Vec<Word>> {
    let start = nu_inverse(&Tableau::row_superstandard(shape.clone()));
    commutation_class_capped(&start, DEFAULT_CAP)
}
