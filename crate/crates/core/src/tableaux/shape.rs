use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// How the rows of a diagram are placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Justification {
    /// All rows end in column `λ_1`.
    Right,
    /// Strictly decreasing rows, each ending one column left of the row above.
    HalfRight,
    /// Right-justified `λ` with `μ_r` cells removed from the right end of row `r`.
    SkewRight,
    /// Any diagram of contiguous row segments, e.g. the conjugate of a half-right shape.
    Free,
}

impl Justification {
    pub fn name(self) -> &'static str {
        match self {
            Justification::Right => "right",
            Justification::HalfRight => "half",
            Justification::SkewRight => "skew",
            Justification::Free => "free",
        }
    }
}

/// A cell in absolute coordinates, row 1 on top and column 1 on the left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A diagram together with its neighbour tables.
///
/// Cells are indexed in row-major order. A standard filling increases along
/// `right` and `down` links, so these links are exactly the covers of the
/// cell poset.
#[derive(Debug, Clone)]
pub struct Shape {
    mode: Justification,
    outer: Vec<usize>,
    inner: Vec<usize>,
    /// Inclusive column range of each row.
    spans: Vec<(usize, usize)>,
    row_start: Vec<usize>,
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    down: Vec<Option<usize>>,
    left: Vec<Option<usize>>,
    up: Vec<Option<usize>>,
}

impl PartialEq for Shape {
    fn eq(&self, other: &Self) -> bool {
        self.spans == other.spans
    }
}

impl Eq for Shape {}

fn check_partition(parts: &[usize], what: &str) -> Result<()> {
    if parts.contains(&0) {
        return Err(Error::InvalidShape(format!("{what} {parts:?} has a zero part")));
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidShape(format!("{what} {parts:?} is not weakly decreasing")));
    }
    Ok(())
}

impl Shape {
    pub fn right(outer: &[usize]) -> Result<Shape> {
        check_partition(outer, "partition")?;
        if outer.is_empty() {
            return Err(Error::EmptyShape);
        }
        let top = outer[0];
        let spans = outer.iter().map(|&len| (top - len + 1, top)).collect();
        Shape::build(Justification::Right, outer.to_vec(), Vec::new(), spans)
    }

    pub fn half_right(outer: &[usize]) -> Result<Shape> {
        check_partition(outer, "partition")?;
        if outer.is_empty() {
            return Err(Error::EmptyShape);
        }
        if outer.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidShape(format!("half-right shape {outer:?} must be strictly decreasing")));
        }
        let top = outer[0];
        let spans = outer
            .iter()
            .enumerate()
            .map(|(r, &len)| {
                let end = top - r;
                (end + 1 - len, end)
            })
            .collect();
        Shape::build(Justification::HalfRight, outer.to_vec(), Vec::new(), spans)
    }

    /// Row `r` occupies columns `λ_1 − λ_r + 1 ..= λ_1 − μ_r`.
    pub fn skew_right(outer: &[usize], inner: &[usize]) -> Result<Shape> {
        check_partition(outer, "partition")?;
        check_partition(inner, "inner partition")?;
        if outer.is_empty() {
            return Err(Error::EmptyShape);
        }
        if inner.len() > outer.len() {
            return Err(Error::InvalidShape(format!("{inner:?} is not contained in {outer:?}")));
        }
        let top = outer[0];
        let mut spans = Vec::with_capacity(outer.len());
        for (r, &len) in outer.iter().enumerate() {
            let cut = inner.get(r).copied().unwrap_or(0);
            if cut >= len {
                return Err(Error::InvalidShape(format!("row {} of {outer:?}/{inner:?} is empty", r + 1)));
            }
            spans.push((top - len + 1, top - cut));
        }
        let mode = if inner.is_empty() { Justification::Right } else { Justification::SkewRight };
        Shape::build(mode, outer.to_vec(), inner.to_vec(), spans)
    }

    /// A diagram from explicit row spans; the justification is recognised when possible.
    pub fn from_spans(spans: Vec<(usize, usize)>) -> Result<Shape> {
        if spans.is_empty() {
            return Err(Error::EmptyShape);
        }
        if spans.iter().any(|&(s, e)| s == 0 || s > e) {
            return Err(Error::InvalidShape(format!("bad row spans {spans:?}")));
        }
        let min_col = spans.iter().map(|s| s.0).min().unwrap();
        let spans: Vec<(usize, usize)> = spans.iter().map(|&(s, e)| (s + 1 - min_col, e + 1 - min_col)).collect();
        let lens: Vec<usize> = spans.iter().map(|&(s, e)| e + 1 - s).collect();
        let top = spans.iter().map(|s| s.1).max().unwrap();
        let outer: Vec<usize> = spans.iter().map(|&(s, _)| top + 1 - s).collect();
        let inner: Vec<usize> = spans.iter().map(|&(_, e)| top - e).filter(|&m| m > 0).collect();
        let candidates = [Shape::right(&lens).ok(), Shape::half_right(&lens).ok(), Shape::skew_right(&outer, &inner).ok()];
        for shape in candidates.into_iter().flatten() {
            if shape.spans == spans {
                return Ok(shape);
            }
        }
        Shape::build(Justification::Free, lens, Vec::new(), spans)
    }

    fn build(mode: Justification, outer: Vec<usize>, inner: Vec<usize>, spans: Vec<(usize, usize)>) -> Result<Shape> {
        let mut cells = Vec::new();
        let mut row_start = Vec::with_capacity(spans.len());
        for (r, &(s, e)) in spans.iter().enumerate() {
            row_start.push(cells.len());
            for c in s..=e {
                cells.push(Cell { row: r + 1, col: c });
            }
        }
        if cells.is_empty() {
            return Err(Error::EmptyShape);
        }
        let n = cells.len();
        let mut shape = Shape {
            mode,
            outer,
            inner,
            spans,
            row_start,
            cells,
            right: vec![None; n],
            down: vec![None; n],
            left: vec![None; n],
            up: vec![None; n],
        };
        for i in 0..n {
            let Cell { row, col } = shape.cells[i];
            shape.right[i] = shape.index_of(row, col + 1);
            shape.down[i] = shape.index_of(row + 1, col);
            shape.left[i] = if col > 1 { shape.index_of(row, col - 1) } else { None };
            shape.up[i] = if row > 1 { shape.index_of(row - 1, col) } else { None };
        }
        Ok(shape)
    }

    pub fn mode(&self) -> Justification {
        self.mode
    }

    pub fn outer(&self) -> &[usize] {
        &self.outer
    }

    pub fn inner(&self) -> &[usize] {
        &self.inner
    }

    pub fn spans(&self) -> &[(usize, usize)] {
        &self.spans
    }

    pub fn row_lengths(&self) -> Vec<usize> {
        self.spans.iter().map(|&(s, e)| e + 1 - s).collect()
    }

    pub fn rows(&self) -> usize {
        self.spans.len()
    }

    pub fn max_col(&self) -> usize {
        self.spans.iter().map(|s| s.1).max().unwrap_or(0)
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, index: usize) -> Cell {
        self.cells[index]
    }

    pub fn index_of(&self, row: usize, col: usize) -> Option<usize> {
        if row == 0 || row > self.spans.len() {
            return None;
        }
        let (s, e) = self.spans[row - 1];
        (s..=e).contains(&col).then(|| self.row_start[row - 1] + col - s)
    }

    pub fn right_of(&self, i: usize) -> Option<usize> {
        self.right[i]
    }

    pub fn below(&self, i: usize) -> Option<usize> {
        self.down[i]
    }

    pub fn left_of(&self, i: usize) -> Option<usize> {
        self.left[i]
    }

    pub fn above(&self, i: usize) -> Option<usize> {
        self.up[i]
    }

    /// `true` when `j` is the right or lower neighbour of `i`.
    pub fn covers(&self, i: usize, j: usize) -> bool {
        self.right[i] == Some(j) || self.down[i] == Some(j)
    }

    /// Diagonal index `col − row` of a cell.
    pub fn diagonal(&self, i: usize) -> i64 {
        let c = self.cells[i];
        c.col as i64 - c.row as i64
    }

    /// Consecutive rows share at least one column.
    pub fn is_connected(&self) -> bool {
        self.spans.windows(2).all(|w| w[0].0.max(w[1].0) <= w[0].1.min(w[1].1))
    }

    /// `λ_1 > λ_2` and `λ_ℓ = 1` for the outer partition.
    pub fn has_hook_condition(&self) -> bool {
        let lens = &self.outer;
        let first_longer = lens.len() < 2 || lens[0] > lens[1];
        first_longer && lens.last() == Some(&1)
    }

    /// `λ_1 ≥ λ_2 + 2` and `λ_ℓ = 1`.
    pub fn has_strong_hook_condition(&self) -> bool {
        let lens = &self.outer;
        let gap = lens.len() < 2 || lens[0] >= lens[1] + 2;
        gap && lens.last() == Some(&1)
    }

    /// Parses `right:4,3,2,1`, `half:5,3,1` or `skew:4,3,2,1/1`.
    pub fn parse(notation: &str) -> Result<Shape> {
        let (mode, body) = notation
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("shape `{notation}` needs a `right:`, `half:` or `skew:` prefix")))?;
        let parts = |text: &str| -> Result<Vec<usize>> {
            if text.trim().is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|e| Error::Parse(format!("part `{p}`: {e}"))))
                .collect()
        };
        match mode.trim() {
            "right" => Shape::right(&parts(body)?),
            "half" | "half-right" => Shape::half_right(&parts(body)?),
            "skew" => {
                let (outer, inner) = body.split_once('/').unwrap_or((body, ""));
                Shape::skew_right(&parts(outer)?, &parts(inner)?)
            }
            other => Err(Error::Parse(format!("unknown shape mode `{other}`"))),
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self.mode {
            Justification::SkewRight => write!(f, "skew:{}/{}", join(&self.outer), join(&self.inner)),
            Justification::Free => {
                let spans: Vec<String> = self.spans.iter().map(|(s, e)| format!("{s}-{e}")).collect();
                write!(f, "free:{}", spans.join(","))
            }
            mode => write!(f, "{}:{}", mode.name(), join(&self.outer)),
        }
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Shape::parse(s)
    }
}

/// All partitions of `n`, largest parts first, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=max.min(remaining)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `n` into distinct parts.
pub fn strict_partitions(n: usize) -> Vec<Vec<usize>> {
    partitions(n).into_iter().filter(|p| p.windows(2).all(|w| w[0] > w[1])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_justified_geometry() {
        let s = Shape::right(&[5, 2, 1]).unwrap();
        assert_eq!(s.spans(), &[(1, 5), (4, 5), (5, 5)]);
        assert_eq!(s.size(), 8);
        let six = s.index_of(2, 4).unwrap();
        assert_eq!(s.right_of(six), s.index_of(2, 5));
        assert_eq!(s.below(six), None);
        assert_eq!(s.above(six), s.index_of(1, 4));
        assert!(s.has_hook_condition());
        assert!(s.has_strong_hook_condition());
    }

    #[test]
    fn half_right_geometry() {
        let s = Shape::half_right(&[5, 3, 1]).unwrap();
        assert_eq!(s.spans(), &[(1, 5), (2, 4), (3, 3)]);
        assert!(Shape::half_right(&[3, 3]).is_err());
    }

    #[test]
    fn skew_removes_right_end() {
        // top row loses its rightmost cell
        let s = Shape::skew_right(&[4, 3, 2, 1], &[1]).unwrap();
        assert_eq!(s.spans(), &[(1, 3), (2, 4), (3, 4), (4, 4)]);
        assert_eq!(s.mode(), Justification::SkewRight);
        assert!(s.is_connected());
        assert!(Shape::skew_right(&[2, 1], &[2]).is_err());
        let gap = Shape::skew_right(&[4, 1], &[3]).unwrap();
        assert!(!gap.is_connected());
    }

    #[test]
    fn classification_from_spans() {
        assert_eq!(Shape::from_spans(vec![(1, 3), (2, 3), (3, 3)]).unwrap().mode(), Justification::Right);
        assert_eq!(Shape::from_spans(vec![(1, 5), (2, 4), (3, 3)]).unwrap().mode(), Justification::HalfRight);
        assert_eq!(Shape::from_spans(vec![(1, 3), (2, 4), (3, 4), (4, 4)]).unwrap().mode(), Justification::SkewRight);
        assert_eq!(Shape::from_spans(vec![(3, 3), (2, 3), (1, 3), (2, 3), (3, 3)]).unwrap().mode(), Justification::Free);
    }

    #[test]
    fn parse_round_trip() {
        for notation in ["right:4,3,2,1", "half:5,3,1", "skew:4,3,2,1/1"] {
            assert_eq!(Shape::parse(notation).unwrap().to_string(), notation);
        }
        assert!(Shape::parse("4,3").is_err());
        assert!(Shape::parse("right:2,3").is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, [1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(strict_partitions(6), vec![vec![6], vec![5, 1], vec![4, 2], vec![3, 2, 1]]);
    }
}
