use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde_json::json;

use super::shape::{Cell, Justification, Shape};
use crate::error::{Error, Result};

/// A standard filling of a [`Shape`] with `1..=N`.
///
/// Equality, hashing and ordering look at the entries in row-reading order;
/// comparing tableaux of different shapes is meaningless.
#[derive(Clone)]
pub struct Tableau {
    shape: Arc<Shape>,
    /// Entry of each cell, in row-major cell order.
    entries: Vec<u16>,
    /// Cell holding entry `v` at index `v - 1`.
    cell_of: Vec<u16>,
}

impl Tableau {
    /// Builds a tableau from the entries of each row, left to right.
    pub fn from_rows(shape: Arc<Shape>, rows: &[Vec<u16>]) -> Result<Tableau> {
        if rows.len() != shape.rows() {
            return Err(Error::InvalidTableau(format!("expected {} rows, got {}", shape.rows(), rows.len())));
        }
        let mut entries = Vec::with_capacity(shape.size());
        for (r, row) in rows.iter().enumerate() {
            let (s, e) = shape.spans()[r];
            if row.len() != e + 1 - s {
                return Err(Error::InvalidTableau(format!("row {} has {} entries, expected {}", r + 1, row.len(), e + 1 - s)));
            }
            entries.extend_from_slice(row);
        }
        Tableau::from_entries(shape, entries)
    }

    /// Builds a tableau from the entries in row-major cell order.
    pub fn from_entries(shape: Arc<Shape>, entries: Vec<u16>) -> Result<Tableau> {
        let n = shape.size();
        if entries.len() != n {
            return Err(Error::InvalidTableau(format!("expected {n} entries, got {}", entries.len())));
        }
        let mut cell_of = vec![u16::MAX; n];
        for (cell, &v) in entries.iter().enumerate() {
            if v == 0 || v as usize > n || cell_of[v as usize - 1] != u16::MAX {
                return Err(Error::InvalidTableau(format!("entries are not a permutation of 1..={n}")));
            }
            cell_of[v as usize - 1] = cell as u16;
        }
        for cell in 0..n {
            for next in [shape.right_of(cell), shape.below(cell)].into_iter().flatten() {
                if entries[next] <= entries[cell] {
                    return Err(Error::InvalidTableau(format!(
                        "entries {} at {} and {} at {} are out of order",
                        entries[cell],
                        shape.cell(cell),
                        entries[next],
                        shape.cell(next)
                    )));
                }
            }
        }
        Ok(Tableau { shape, entries, cell_of })
    }

    pub(crate) fn from_parts_unchecked(shape: Arc<Shape>, entries: Vec<u16>) -> Tableau {
        let mut cell_of = vec![0u16; entries.len()];
        for (cell, &v) in entries.iter().enumerate() {
            cell_of[v as usize - 1] = cell as u16;
        }
        Tableau { shape, entries, cell_of }
    }

    /// Fills the shape row by row with `1..=N`, which is always standard.
    pub fn row_superstandard(shape: Arc<Shape>) -> Tableau {
        let entries = (1..=shape.size() as u16).collect();
        Tableau::from_parts_unchecked(shape, entries)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn shape_arc(&self) -> &Arc<Shape> {
        &self.shape
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u16] {
        &self.entries
    }

    /// Entry in a given cell index.
    pub fn entry(&self, cell: usize) -> usize {
        self.entries[cell] as usize
    }

    pub fn entry_at(&self, row: usize, col: usize) -> Option<usize> {
        self.shape.index_of(row, col).map(|i| self.entry(i))
    }

    /// Cell index holding `value` (1-based).
    pub fn cell_of(&self, value: usize) -> usize {
        self.cell_of[value - 1] as usize
    }

    pub fn position_of(&self, value: usize) -> Cell {
        self.shape.cell(self.cell_of(value))
    }

    pub fn rows(&self) -> Vec<Vec<u16>> {
        let mut out = Vec::with_capacity(self.shape.rows());
        let mut at = 0;
        for len in self.shape.row_lengths() {
            out.push(self.entries[at..at + len].to_vec());
            at += len;
        }
        out
    }

    /// Swaps `i` and `i+1` unless one covers the other.
    pub(crate) fn toggle(&mut self, i: usize) {
        let a = self.cell_of[i - 1] as usize;
        let b = self.cell_of[i] as usize;
        if self.shape.covers(a, b) {
            return;
        }
        self.entries[a] = (i + 1) as u16;
        self.entries[b] = i as u16;
        self.cell_of.swap(i - 1, i);
    }

    /// Text format: one row per line, space separated, a `.` for each empty
    /// column left of the row.
    pub fn to_text(&self) -> String {
        let width = self.size().to_string().len();
        let mut out = String::new();
        for (r, row) in self.rows().iter().enumerate() {
            let (s, _) = self.shape.spans()[r];
            let mut parts: Vec<String> = (1..s).map(|_| format!("{:>width$}", ".")).collect();
            parts.extend(row.iter().map(|v| format!("{v:>width$}")));
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the text format; the justification is recognised from the geometry.
    pub fn parse_text(text: &str) -> Result<Tableau> {
        let mut spans = Vec::new();
        let mut rows = Vec::new();
        for line in text.lines().filter(|l| !l.trim().is_empty()) {
            let tokens: Vec<&str> = line.split_whitespace().collect();
            let dots = tokens.iter().take_while(|t| **t == ".").count();
            let values = tokens[dots..]
                .iter()
                .map(|t| t.parse::<u16>().map_err(|e| Error::Parse(format!("entry `{t}`: {e}"))))
                .collect::<Result<Vec<u16>>>()?;
            if values.is_empty() {
                return Err(Error::Parse(format!("row `{line}` has no entries")));
            }
            spans.push((dots + 1, dots + values.len()));
            rows.push(values);
        }
        let shape = Arc::new(Shape::from_spans(spans)?);
        Tableau::from_rows(shape, &rows)
    }

    /// `{"shape": {"outer", "inner", "mode"}, "rows": [[...], ...]}`; free shapes add `"starts"`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut shape = json!({
            "outer": self.shape.outer(),
            "inner": self.shape.inner(),
            "mode": self.shape.mode().name(),
        });
        if self.shape.mode() == Justification::Free {
            shape["starts"] = json!(self.shape.spans().iter().map(|s| s.0).collect::<Vec<_>>());
        }
        json!({ "shape": shape, "rows": self.rows() })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Tableau> {
        let bad = |what: &str| Error::Parse(format!("tableau JSON: {what}"));
        let list = |v: &serde_json::Value| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad("expected an array"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("expected integers")))
                .collect()
        };
        let shape = &value["shape"];
        let outer = list(&shape["outer"])?;
        let inner = if shape["inner"].is_null() { Vec::new() } else { list(&shape["inner"])? };
        let shape = match shape["mode"].as_str().ok_or_else(|| bad("missing mode"))? {
            "right" => Shape::right(&outer)?,
            "half" | "half_right" => Shape::half_right(&outer)?,
            "skew" | "skew_right" => Shape::skew_right(&outer, &inner)?,
            "free" => {
                let starts = list(&shape["starts"])?;
                Shape::from_spans(starts.iter().zip(&outer).map(|(&s, &len)| (s, s + len - 1)).collect())?
            }
            other => return Err(bad(&format!("unknown mode `{other}`"))),
        };
        let rows = value["rows"]
            .as_array()
            .ok_or_else(|| bad("missing rows"))?
            .iter()
            .map(|r| list(r).map(|r| r.into_iter().map(|v| v as u16).collect()))
            .collect::<Result<Vec<Vec<u16>>>>()?;
        Tableau::from_rows(Arc::new(shape), &rows)
    }
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries && *self.shape == *other.shape
    }
}

impl Eq for Tableau {}

impl Hash for Tableau {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.entries.hash(state);
    }
}

impl PartialOrd for Tableau {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Tableau {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "Tableau[{}]", rows.join(" / "))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Calls `visit` on every standard filling, placing `1, 2, ..` in turn.
/// Returns the number of fillings.
pub fn visit_tableaux(shape: &Arc<Shape>, mut visit: impl FnMut(&Tableau)) -> u64 {
    try_visit_tableaux(shape, |t| {
        visit(t);
        true
    })
    .0
}

/// Like [`visit_tableaux`], but stops as soon as `visit` returns `false`.
/// Returns the number of fillings visited and whether the walk completed.
pub fn try_visit_tableaux(shape: &Arc<Shape>, mut visit: impl FnMut(&Tableau) -> bool) -> (u64, bool) {
    let n = shape.size();
    let mut need: Vec<u8> = (0..n)
        .map(|c| shape.left_of(c).is_some() as u8 + shape.above(c).is_some() as u8)
        .collect();
    let mut entries = vec![0u16; n];
    let mut count = 0u64;

    fn rec(
        shape: &Arc<Shape>,
        next: u16,
        need: &mut [u8],
        entries: &mut [u16],
        count: &mut u64,
        visit: &mut dyn FnMut(&Tableau) -> bool,
    ) -> bool {
        let n = entries.len();
        if next as usize > n {
            *count = count.checked_add(1).expect("tableau count overflow");
            return visit(&Tableau::from_parts_unchecked(shape.clone(), entries.to_vec()));
        }
        for c in 0..n {
            if entries[c] == 0 && need[c] == 0 {
                entries[c] = next;
                for succ in [shape.right_of(c), shape.below(c)].into_iter().flatten() {
                    need[succ] -= 1;
                }
                let go_on = rec(shape, next + 1, need, entries, count, visit);
                for succ in [shape.right_of(c), shape.below(c)].into_iter().flatten() {
                    need[succ] += 1;
                }
                entries[c] = 0;
                if !go_on {
                    return false;
                }
            }
        }
        true
    }

    let done = rec(shape, 1, &mut need, &mut entries, &mut count, &mut visit);
    (count, done)
}

/// All standard fillings, sorted lexicographically by row-reading word.
pub fn enumerate(shape: &Arc<Shape>) -> Vec<Tableau> {
    let mut out = Vec::new();
    visit_tableaux(shape, |t| out.push(t.clone()));
    out.sort();
    out
}

/// [`enumerate`], failing once more than `cap` fillings turn up.
pub fn enumerate_capped(shape: &Arc<Shape>, cap: usize) -> Result<Vec<Tableau>> {
    let mut out = Vec::new();
    let (_, done) = try_visit_tableaux(shape, |t| {
        out.push(t.clone());
        out.len() <= cap
    });
    if !done {
        return Err(Error::ExplosionGuard { cap });
    }
    out.sort();
    Ok(out)
}

pub fn count_tableaux(shape: &Arc<Shape>) -> u64 {
    visit_tableaux(shape, |_| {})
}
