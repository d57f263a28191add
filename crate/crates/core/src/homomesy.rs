//! Even and odd promotion, orbit decompositions and the word-level map `Φ`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::fraction::{self, format_fraction, Fraction};
use crate::tableaux::{braid_hooks, Shape, Tableau};
use crate::words::Word;

/// Anything carrying the toggles `τ_1 .. τ_{N−1}`.
pub trait TauCarrier: Clone + Eq + Hash + Ord {
    /// The `N` of `τ_1 .. τ_{N−1}`.
    fn degree(&self) -> usize;
    fn toggle_in_place(&mut self, i: usize);
}

impl TauCarrier for Tableau {
    fn degree(&self) -> usize {
        self.size()
    }

    fn toggle_in_place(&mut self, i: usize) {
        self.toggle(i);
    }
}

impl TauCarrier for Word {
    fn degree(&self) -> usize {
        self.len()
    }

    fn toggle_in_place(&mut self, i: usize) {
        self.tau_in_place(i);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    /// `τ_{o(i)}`: odd for odd `i`, even for even `i`.
    pub fn of_step(i: usize) -> Parity {
        if i % 2 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

/// `τ_o` or `τ_e`: every toggle of one parity. They commute, so order is irrelevant.
pub fn tau_parity<T: TauCarrier>(x: &T, parity: Parity) -> T {
    let mut out = x.clone();
    apply_parity(&mut out, parity);
    out
}

fn apply_parity<T: TauCarrier>(x: &mut T, parity: Parity) {
    let start = match parity {
        Parity::Odd => 1,
        Parity::Even => 2,
    };
    let n = x.degree();
    let mut i = start;
    while i < n {
        x.toggle_in_place(i);
        i += 2;
    }
}

/// `x.τ_{o(1)} τ_{o(2)} ⋯ τ_{o(j)}`.
pub fn window_step<T: TauCarrier>(x: &T, j: usize) -> T {
    let mut out = x.clone();
    for i in 1..=j {
        apply_parity(&mut out, Parity::of_step(i));
    }
    out
}

/// `x.τ_{o(j)} ⋯ τ_{o(1)}`, the inverse of [`window_step`].
pub fn window_step_back<T: TauCarrier>(x: &T, j: usize) -> T {
    let mut out = x.clone();
    for i in (1..=j).rev() {
        apply_parity(&mut out, Parity::of_step(i));
    }
    out
}

/// Which group acts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitMode {
    /// `⟨τ_o, τ_e⟩`.
    Dihedral,
    /// The cyclic group of `τ_o τ_e`.
    Gyration,
    /// `⟨τ_o⟩`.
    OrderTwoOdd,
    /// `⟨τ_e⟩`.
    OrderTwoEven,
}

impl OrbitMode {
    pub fn name(self) -> &'static str {
        match self {
            OrbitMode::Dihedral => "dihedral",
            OrbitMode::Gyration => "gyration",
            OrbitMode::OrderTwoOdd => "order-two-odd",
            OrbitMode::OrderTwoEven => "order-two-even",
        }
    }

    pub fn parse(text: &str) -> Result<OrbitMode> {
        match text {
            "dihedral" => Ok(OrbitMode::Dihedral),
            "gyration" => Ok(OrbitMode::Gyration),
            "order-two-odd" | "odd" => Ok(OrbitMode::OrderTwoOdd),
            "order-two-even" | "even" => Ok(OrbitMode::OrderTwoEven),
            other => Err(Error::Parse(format!("unknown group `{other}`"))),
        }
    }

    fn neighbours<T: TauCarrier>(self, x: &T) -> Vec<T> {
        match self {
            OrbitMode::Dihedral => vec![tau_parity(x, Parity::Odd), tau_parity(x, Parity::Even)],
            OrbitMode::Gyration => vec![gyration(x)],
            OrbitMode::OrderTwoOdd => vec![tau_parity(x, Parity::Odd)],
            OrbitMode::OrderTwoEven => vec![tau_parity(x, Parity::Even)],
        }
    }
}

impl fmt::Display for OrbitMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `x.τ_o τ_e`.
pub fn gyration<T: TauCarrier>(x: &T) -> T {
    let mut out = x.clone();
    apply_parity(&mut out, Parity::Odd);
    apply_parity(&mut out, Parity::Even);
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit<T> {
    /// Sorted; the first member is the orbit's id.
    pub members: Vec<T>,
    pub mode: OrbitMode,
}

impl<T> Orbit<T> {
    pub fn representative(&self) -> &T {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The orbit of one element.
pub fn orbit_of<T: TauCarrier>(x: &T, mode: OrbitMode) -> Orbit<T> {
    let mut seen = std::collections::HashSet::new();
    let mut queue = VecDeque::from([x.clone()]);
    seen.insert(x.clone());
    while let Some(y) = queue.pop_front() {
        for z in mode.neighbours(&y) {
            if seen.insert(z.clone()) {
                queue.push_back(z);
            }
        }
    }
    let mut members: Vec<T> = seen.into_iter().collect();
    members.sort();
    Orbit { members, mode }
}

/// Partitions `items` into orbits, ordered by their least member. The set
/// must be closed under the group; elements reached outside it are still
/// collected into their orbit.
pub fn dihedral_orbits<T: TauCarrier>(items: &[T], mode: OrbitMode) -> Vec<Orbit<T>> {
    let mut assigned: HashMap<T, ()> = HashMap::with_capacity(items.len());
    let mut out = Vec::new();
    for x in items {
        if assigned.contains_key(x) {
            continue;
        }
        let orbit = orbit_of(x, mode);
        for m in &orbit.members {
            assigned.insert(m.clone(), ());
        }
        out.push(orbit);
    }
    out.sort_by(|a, b| a.members[0].cmp(&b.members[0]));
    out
}

/// Orbit index of every element, keyed by the element.
pub fn orbit_index<T: TauCarrier>(orbits: &[Orbit<T>]) -> HashMap<T, usize> {
    let mut out = HashMap::new();
    for (i, o) in orbits.iter().enumerate() {
        for m in &o.members {
            out.insert(m.clone(), i);
        }
    }
    out
}

pub fn orbit_average<T>(orbit: &Orbit<T>, statistic: impl Fn(&T) -> i64) -> Result<Fraction> {
    if orbit.members.is_empty() {
        return Err(Error::EmptyOrbit);
    }
    let total: i64 = orbit.members.iter().map(statistic).sum();
    Ok(fraction::mean(total, orbit.members.len()))
}

/// Named statistics selectable by name.
pub const STATISTICS: &[(&str, &str)] = &[
    ("braid-hooks", "number of braid hooks of a tableau"),
    ("braid-moves", "number of braid moves of a word"),
    ("descents", "size of des_I of a linear extension for a fixed ideal I"),
];

pub fn braid_hooks_count(t: &Tableau) -> i64 {
    braid_hooks(t).len() as i64
}

pub fn braid_moves_count(w: &Word) -> i64 {
    w.braid_count() as i64
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    #[serde(serialize_with = "fraction::serialize")]
    pub average: Fraction,
    pub representative: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomomesyReport {
    pub mode: OrbitMode,
    pub statistic: String,
    pub orbits: Vec<OrbitSummary>,
    pub homomesic: bool,
    #[serde(serialize_with = "fraction::serialize")]
    pub global_average: Fraction,
}

impl HomomesyReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "mode": self.mode.name(),
            "statistic": self.statistic,
            "orbits": self.orbits.iter().map(|o| json!({
                "size": o.size,
                "average": format_fraction(&o.average),
                "representative": o.representative,
            })).collect::<Vec<_>>(),
            "homomesic": self.homomesic,
            "global_average": format_fraction(&self.global_average),
        })
    }

    /// `true` when every orbit averages exactly `value`.
    pub fn all_averages_equal(&self, value: Fraction) -> bool {
        self.orbits.iter().all(|o| o.average == value)
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![["orbit".to_string(), "size".to_string(), "average".to_string(), "representative".to_string()]];
        for (i, o) in self.orbits.iter().enumerate() {
            rows.push([(i + 1).to_string(), o.size.to_string(), format_fraction(&o.average), o.representative.clone()]);
        }
        let mut out = align(&rows);
        out.push_str(&format!(
            "mode {}  statistic {}  orbits {}  global average {}  homomesic {}\n",
            self.mode,
            self.statistic,
            self.orbits.len(),
            format_fraction(&self.global_average),
            self.homomesic
        ));
        out
    }
}

fn align<const K: usize>(rows: &[[String; K]]) -> String {
    let mut widths = [0usize; K];
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().zip(&widths).map(|(c, &w)| format!("{c:<w$}")).collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

/// Orbit decomposition of `items` with the per-orbit averages of `statistic`.
pub fn homomesy_report<T: TauCarrier>(
    items: &[T],
    mode: OrbitMode,
    statistic_name: &str,
    statistic: impl Fn(&T) -> i64,
    show: impl Fn(&T) -> String,
) -> Result<HomomesyReport> {
    if items.is_empty() {
        return Err(Error::EmptyInput);
    }
    let orbits = dihedral_orbits(items, mode);
    let mut summaries = Vec::with_capacity(orbits.len());
    let mut total = 0i64;
    let mut count = 0usize;
    for o in &orbits {
        let sum: i64 = o.members.iter().map(&statistic).sum();
        total += sum;
        count += o.len();
        summaries.push(OrbitSummary {
            size: o.len(),
            average: fraction::mean(sum, o.len()),
            representative: show(o.representative()),
        });
    }
    let homomesic = summaries.windows(2).all(|w| w[0].average == w[1].average);
    Ok(HomomesyReport {
        mode,
        statistic: statistic_name.to_string(),
        orbits: summaries,
        homomesic,
        global_average: fraction::mean(total, count),
    })
}

/// One row of the moving-window table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowRow {
    pub i: usize,
    /// `w^(i−2)`.
    pub word: String,
    pub a: u8,
    pub c: u8,
    pub diff: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowTable {
    pub rows: Vec<WindowRow>,
}

impl WindowTable {
    /// The unique `i` with `a_i = c_i`, if any.
    pub fn balanced_position(&self) -> Option<usize> {
        self.rows.iter().find(|r| r.diff == 0).map(|r| r.i)
    }

    pub fn to_table(&self) -> String {
        let mut rows = vec![[
            "i".to_string(),
            "w^(i-2)".to_string(),
            "a_i".to_string(),
            "c_i".to_string(),
            "c_i-a_i".to_string(),
        ]];
        for r in &self.rows {
            rows.push([r.i.to_string(), r.word.clone(), r.a.to_string(), r.c.to_string(), r.diff.to_string()]);
        }
        align(&rows)
    }
}

/// Rows `i = 2 .. N−1` with `a_i = w^(i−2)_{i−1}` and `c_i = w^(i−2)_{i+1}`.
pub fn window_table(w: &Word) -> WindowTable {
    let n = w.len();
    let mut rows = Vec::new();
    let mut current = w.clone();
    for i in 2..n {
        if i > 2 {
            apply_parity(&mut current, Parity::of_step(i - 2));
        }
        let (a, c) = (current.at(i - 1), current.at(i + 1));
        rows.push(WindowRow { i, word: current.to_string(), a, c, diff: c as i32 - a as i32 });
    }
    WindowTable { rows }
}

/// `true` when `w` has a factor `a (a+1) a` with the `a+1` at position `k`.
pub fn is_braid_at(w: &Word, k: usize) -> bool {
    k >= 2 && k < w.len() && w.at(k - 1) == w.at(k + 1) && w.at(k) == w.at(k - 1) + 1
}

/// `Φ(k, w) = w.τ_{o(k−2)} ⋯ τ_{o(1)}`.
pub fn big_phi(k: usize, w: &Word) -> Result<Word> {
    if !is_braid_at(w, k) {
        return Err(Error::NotABraid { k });
    }
    Ok(window_step_back(w, k - 2))
}

/// The unique preimage `(k, w^(k−2))`, found where the window first balances.
pub fn big_phi_inverse(w: &Word) -> Result<(usize, Word)> {
    let n = w.len();
    let mut current = w.clone();
    for k in 2..n {
        if k > 2 {
            apply_parity(&mut current, Parity::of_step(k - 2));
        }
        if current.at(k - 1) == current.at(k + 1) {
            return Ok((k, current));
        }
    }
    Err(Error::NoPreimage)
}

/// `w_1 ≤ w_3` and `w_{N−2} ≥ w_N` for every word; vacuous below three letters.
pub fn word_condition_check(class: &[Word]) -> bool {
    class.iter().all(|w| {
        let n = w.len();
        n < 3 || (w.at(1) <= w.at(3) && w.at(n - 2) >= w.at(n))
    })
}

/// A filling built by placing `1, 2, ..` in uniformly chosen addable cells.
pub fn random_tableau(shape: &Arc<Shape>, rng: &mut ChaCha8Rng) -> Tableau {
    let n = shape.size();
    let mut need: Vec<u8> =
        (0..n).map(|c| shape.left_of(c).is_some() as u8 + shape.above(c).is_some() as u8).collect();
    let mut entries = vec![0u16; n];
    let mut addable: Vec<usize> = (0..n).filter(|&c| need[c] == 0).collect();
    for v in 1..=n as u16 {
        let pick = *addable.choose(rng).expect("a standard filling always has an addable cell");
        addable.retain(|&c| c != pick);
        entries[pick] = v;
        for succ in [shape.right_of(pick), shape.below(pick)].into_iter().flatten() {
            need[succ] -= 1;
            if need[succ] == 0 {
                addable.push(succ);
            }
        }
        addable.sort_unstable();
    }
    Tableau::from_entries(shape.clone(), entries).expect("greedy placement is standard")
}

/// An orbit whose braid-hook average differs from the target.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitWitness {
    pub mode: OrbitMode,
    /// 1-based index of the sample that found it.
    pub sample: usize,
    pub size: usize,
    #[serde(serialize_with = "fraction::serialize")]
    pub average: Fraction,
    pub representative: String,
}

/// Samples start tableaux with a seeded generator, closes each orbit under
/// `mode`, and stops at the first orbit whose braid-hook average is not `target`.
pub fn sample_orbit_witness(
    shape: &Arc<Shape>,
    mode: OrbitMode,
    samples: usize,
    seed: u64,
    target: Fraction,
) -> Option<OrbitWitness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for sample in 1..=samples {
        let t = random_tableau(shape, &mut rng);
        let orbit = orbit_of(&t, mode);
        let average = orbit_average(&orbit, braid_hooks_count).expect("orbits are nonempty");
        if average != target {
            return Some(OrbitWitness {
                mode,
                sample,
                size: orbit.len(),
                average,
                representative: orbit.representative().to_text(),
            });
        }
    }
    None
}

/// The orbit of `x` when `x` is its least member, so that a stream of all
/// elements meets every orbit exactly once without a visited set.
pub fn orbit_if_leader<T: TauCarrier>(x: &T, mode: OrbitMode) -> Option<Orbit<T>> {
    let orbit = orbit_of(x, mode);
    (orbit.representative() == x).then_some(orbit)
}

/// Totals of an exhaustive orbit sweep.
#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub mode: OrbitMode,
    pub tableaux: u64,
    pub orbits: u64,
    /// Orbits whose braid-hook average is not the target.
    pub off_target: u64,
    pub first_witness: Option<OrbitWitness>,
}

/// Walks every filling of `shape` and averages braid hooks over each orbit.
/// `progress` is called with the running tableau count every `1 << 20` fillings.
pub fn sweep_orbits(
    shape: &Arc<Shape>,
    mode: OrbitMode,
    target: Fraction,
    mut progress: impl FnMut(u64),
) -> SweepSummary {
    let mut summary = SweepSummary { mode, tableaux: 0, orbits: 0, off_target: 0, first_witness: None };
    crate::tableaux::visit_tableaux(shape, |t| {
        summary.tableaux += 1;
        if summary.tableaux.is_multiple_of(1 << 20) {
            progress(summary.tableaux);
        }
        if let Some(orbit) = orbit_if_leader(t, mode) {
            summary.orbits += 1;
            let average = orbit_average(&orbit, braid_hooks_count).expect("orbits are nonempty");
            if average != target {
                summary.off_target += 1;
                summary.first_witness.get_or_insert_with(|| OrbitWitness {
                    mode,
                    sample: summary.tableaux as usize,
                    size: orbit.len(),
                    average,
                    representative: orbit.representative().to_text(),
                });
            }
        }
    });
    summary
}
