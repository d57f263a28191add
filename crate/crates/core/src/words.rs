//! Words in the simple transpositions of the symmetric group: reducedness,
//! commutation and braid moves, commutation classes and the full graph of
//! reduced words.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::{self, Fraction};

/// Default bound on the number of states a breadth-first closure may visit.
pub const DEFAULT_CAP: usize = 100_000_000;

/// A permutation of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds a permutation from its one-line notation `w(1) .. w(n)`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The longest element `n n-1 .. 1`.
    pub fn longest(n: usize) -> Self {
        Permutation { images: (1..=n).rev().collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Coxeter length, computed as the number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_a`, which swaps the entries at positions `a` and `a+1`.
    fn right_multiply(&mut self, a: u8) {
        let a = a as usize;
        self.images.swap(a - 1, a);
    }

    /// One reduced word, found by repeatedly stripping a right descent.
    pub fn some_reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut reversed = Vec::with_capacity(self.length());
        while let Some(a) = (1..w.rank()).find(|&a| w.images[a - 1] > w.images[a]) {
            w.right_multiply(a as u8);
            reversed.push(a as u8);
        }
        reversed.reverse();
        Word { letters: reversed, rank: self.rank() }
    }

    /// Every permutation of `1..=n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
            let n = used.len() - 1;
            if prefix.len() == n {
                out.push(Permutation { images: prefix.clone() });
                return;
            }
            for v in 1..=n {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A word in the generators `s_1 .. s_{rank-1}` of the symmetric group on `rank` letters.
///
/// Words built with [`Word::reduced`] are reduced. Words built with [`Word::new`] only
/// satisfy the quadratic rule (no factor `aa`), which is what skew shapes need.
/// Ordering is lexicographic on the letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u8>,
    rank: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveKind {
    Commutation,
    /// A factor `a (a+1) a`.
    BraidUp,
    /// A factor `(a+1) a (a+1)`.
    BraidDown,
}

impl MoveKind {
    pub fn is_braid(self) -> bool {
        !matches!(self, MoveKind::Commutation)
    }
}

/// A place where a move applies; `position` is the 1-based start of the factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MoveSite {
    pub position: usize,
    pub kind: MoveKind,
}

fn check_letters(letters: &[u8], rank: usize) -> Result<()> {
    for &a in letters {
        if a == 0 || a as usize >= rank {
            return Err(Error::LetterOutOfRange { letter: a as usize, rank });
        }
    }
    Ok(())
}

/// Builds a reduced word, rejecting words that are not reduced.
pub fn make_reduced_word(letters: &[u8], rank: usize) -> Result<Word> {
    Word::reduced(letters.to_vec(), rank)
}

/// Builds a word that may be non-reduced but never contains a factor `aa`.
pub fn make_word(letters: &[u8], rank: usize) -> Result<Word> {
    Word::new(letters.to_vec(), rank)
}

/// Product of the simple transpositions read left to right.
pub fn word_to_permutation(letters: &[u8], rank: usize) -> Permutation {
    let mut w = Permutation::identity(rank);
    for &a in letters {
        w.right_multiply(a);
    }
    w
}

pub fn is_reduced(letters: &[u8], rank: usize) -> bool {
    word_to_permutation(letters, rank).length() == letters.len()
}

/// `(s_1 .. s_{n-1})(s_1 .. s_{n-2}) .. (s_1 s_2)(s_1)`.
pub fn staircase_word(n: usize) -> Word {
    assert!(n >= 2, "staircase word needs n >= 2");
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for top in (1..n).rev() {
        letters.extend(1..=top as u8);
    }
    Word { letters, rank: n }
}

/// The word whose heap is the shifted trapezoid `(2n+1, 2n-1, .., 3, 1)`:
/// the product over `i = 1..=2n+1` of `s_i s_{i-2} .. s_{2 - (i mod 2)}`, in the
/// symmetric group on `2n+2` letters.
pub fn trapezoid_word(n: usize) -> Word {
    assert!(n >= 1, "trapezoid word needs n >= 1");
    let mut letters = Vec::with_capacity((n + 1) * (n + 1));
    for i in 1..=(2 * n + 1) {
        let low = 2 - (i % 2);
        let mut a = i;
        loop {
            letters.push(a as u8);
            if a <= low {
                break;
            }
            a -= 2;
        }
    }
    Word { letters, rank: 2 * n + 2 }
}

impl Word {
    /// Checks letter range and the quadratic rule only.
    pub fn new(letters: Vec<u8>, rank: usize) -> Result<Self> {
        check_letters(&letters, rank)?;
        if let Some(p) = letters.windows(2).position(|f| f[0] == f[1]) {
            return Err(Error::QuadraticRule { letter: letters[p], position: p + 1 });
        }
        Ok(Word { letters, rank })
    }

    pub fn reduced(letters: Vec<u8>, rank: usize) -> Result<Self> {
        check_letters(&letters, rank)?;
        if !is_reduced(&letters, rank) {
            return Err(Error::NotReduced);
        }
        Ok(Word { letters, rank })
    }

    /// Parses `1231423121` or `1,2,10,3`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        Word::new(parse_letters(text)?, rank)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// 1-based letter access.
    pub fn at(&self, position: usize) -> u8 {
        self.letters[position - 1]
    }

    pub fn is_reduced(&self) -> bool {
        is_reduced(&self.letters, self.rank)
    }

    pub fn permutation(&self) -> Permutation {
        word_to_permutation(&self.letters, self.rank)
    }

    /// All commutation and braid sites, ordered by position.
    pub fn moves(&self) -> Vec<MoveSite> {
        list_moves(self)
    }

    /// Number of braid sites (up and down).
    pub fn braid_count(&self) -> usize {
        self.moves().iter().filter(|m| m.kind.is_braid()).count()
    }

    /// Swaps the letters at positions `i` and `i+1` when they commute.
    /// This is the word-side image of the tableau toggle with the same index.
    pub fn tau(&self, i: usize) -> Result<Word> {
        if i == 0 || i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.len().saturating_sub(1) });
        }
        let mut next = self.clone();
        next.tau_in_place(i);
        Ok(next)
    }

    pub(crate) fn tau_in_place(&mut self, i: usize) {
        let (a, b) = (self.letters[i - 1], self.letters[i]);
        if a.abs_diff(b) > 1 {
            self.letters.swap(i - 1, i);
        }
    }
}

pub fn parse_letters(text: &str) -> Result<Vec<u8>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .map(|part| part.trim().parse::<u8>().map_err(|e| Error::Parse(format!("letter `{part}`: {e}"))))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| Error::Parse(format!("letter `{c}`"))))
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.iter().all(|&a| a < 10) {
            for a in &self.letters {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses with the smallest rank that fits the letters.
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let rank = letters.iter().copied().max().unwrap_or(0) as usize + 1;
        Word::new(letters, rank.max(1))
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

pub fn list_moves(w: &Word) -> Vec<MoveSite> {
    let l = &w.letters;
    let mut sites = Vec::new();
    for p in 0..l.len().saturating_sub(1) {
        if l[p].abs_diff(l[p + 1]) > 1 {
            sites.push(MoveSite { position: p + 1, kind: MoveKind::Commutation });
        }
        if p + 2 < l.len() && l[p] == l[p + 2] {
            if l[p + 1] == l[p] + 1 {
                sites.push(MoveSite { position: p + 1, kind: MoveKind::BraidUp });
            } else if l[p] == l[p + 1] + 1 {
                sites.push(MoveSite { position: p + 1, kind: MoveKind::BraidDown });
            }
        }
    }
    sites
}

/// Applies a move. Applying the returned word's move at the same position
/// (with the kind flipped for braids) undoes it.
pub fn apply_move(w: &Word, site: MoveSite) -> Result<Word> {
    let p = site.position;
    let l = &w.letters;
    let invalid = || Error::InvalidSite {
        position: p,
        kind: match site.kind {
            MoveKind::Commutation => "commutation",
            MoveKind::BraidUp => "up braid",
            MoveKind::BraidDown => "down braid",
        },
    };
    if p == 0 {
        return Err(invalid());
    }
    let i = p - 1;
    let mut letters = l.clone();
    match site.kind {
        MoveKind::Commutation => {
            if i + 1 >= l.len() || l[i].abs_diff(l[i + 1]) <= 1 {
                return Err(invalid());
            }
            letters.swap(i, i + 1);
        }
        MoveKind::BraidUp | MoveKind::BraidDown => {
            if i + 2 >= l.len() || l[i] != l[i + 2] {
                return Err(invalid());
            }
            let ok = match site.kind {
                MoveKind::BraidUp => l[i + 1] == l[i] + 1,
                _ => l[i] == l[i + 1] + 1,
            };
            if !ok {
                return Err(invalid());
            }
            letters[i] = l[i + 1];
            letters[i + 1] = l[i];
            letters[i + 2] = l[i + 1];
        }
    }
    Ok(Word { letters, rank: w.rank })
}

/// The kind of the same site after the move has been applied.
pub fn mirrored(site: MoveSite) -> MoveSite {
    let kind = match site.kind {
        MoveKind::Commutation => MoveKind::Commutation,
        MoveKind::BraidUp => MoveKind::BraidDown,
        MoveKind::BraidDown => MoveKind::BraidUp,
    };
    MoveSite { position: site.position, kind }
}

fn closure(start: &Word, cap: usize, braids: bool) -> Result<Vec<Word>> {
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.letters.clone());
    queue.push_back(start.letters.clone());
    while let Some(letters) = queue.pop_front() {
        let w = Word { letters, rank: start.rank };
        for site in list_moves(&w) {
            if site.kind.is_braid() && !braids {
                continue;
            }
            let next = apply_move(&w, site).expect("listed site applies");
            if !seen.contains(&next.letters) {
                if seen.len() >= cap {
                    return Err(Error::ExplosionGuard { cap });
                }
                seen.insert(next.letters.clone());
                queue.push_back(next.letters);
            }
        }
    }
    let mut out: Vec<Word> = seen.into_iter().map(|letters| Word { letters, rank: start.rank }).collect();
    out.sort();
    Ok(out)
}

/// All words reachable by commutation moves, sorted lexicographically.
pub fn commutation_class(w: &Word) -> Result<Vec<Word>> {
    commutation_class_capped(w, DEFAULT_CAP)
}

pub fn commutation_class_capped(w: &Word, cap: usize) -> Result<Vec<Word>> {
    closure(w, cap, false)
}

/// The full set of reduced words of a permutation, sorted lexicographically.
pub fn all_reduced_words(perm: &Permutation) -> Result<Vec<Word>> {
    all_reduced_words_capped(perm, DEFAULT_CAP)
}

pub fn all_reduced_words_capped(perm: &Permutation, cap: usize) -> Result<Vec<Word>> {
    closure(&perm.some_reduced_word(), cap, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Braid,
    Commutation,
}

impl EdgeKind {
    pub fn label(self) -> &'static str {
        match self {
            EdgeKind::Braid => "braid",
            EdgeKind::Commutation => "comm",
        }
    }
}

/// Reduced words of one permutation joined by commutation and braid moves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatsumotoGraph {
    /// Sorted lexicographically.
    pub vertices: Vec<Word>,
    /// Undirected edges `(i, j, kind)` with `i < j`, indices into `vertices`.
    pub edges: Vec<(usize, usize, EdgeKind)>,
}

pub fn matsumoto_graph(perm: &Permutation) -> Result<MatsumotoGraph> {
    matsumoto_graph_capped(perm, DEFAULT_CAP)
}

pub fn matsumoto_graph_capped(perm: &Permutation, cap: usize) -> Result<MatsumotoGraph> {
    let vertices = all_reduced_words_capped(perm, cap)?;
    let index: HashMap<&[u8], usize> = vertices.iter().enumerate().map(|(i, w)| (w.letters(), i)).collect();
    let mut edges = Vec::new();
    for (i, w) in vertices.iter().enumerate() {
        for site in list_moves(w) {
            let j = index[apply_move(w, site)?.letters()];
            if i < j {
                let kind = if site.kind.is_braid() { EdgeKind::Braid } else { EdgeKind::Commutation };
                edges.push((i, j, kind));
            }
        }
    }
    edges.sort();
    edges.dedup();
    Ok(MatsumotoGraph { vertices, edges })
}

impl MatsumotoGraph {
    pub fn braid_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.2 == EdgeKind::Braid).count()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// `{"vertices": [...], "edges": [[i, j, "braid"|"comm"], ...]}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "edges": self.edges.iter().map(|&(i, j, k)| serde_json::json!([i, j, k.label()])).collect::<Vec<_>>(),
        })
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph reduced_words {\n");
        for (i, w) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  v{i} [label=\"{w}\"];\n"));
        }
        for &(i, j, k) in &self.edges {
            let style = if k == EdgeKind::Braid { "solid" } else { "dotted" };
            out.push_str(&format!("  v{i} -- v{j} [style={style}];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Braid-move counts over a set of words.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidMoveStats {
    pub words: usize,
    pub total: usize,
    #[serde(serialize_with = "fraction::serialize")]
    pub mean: Fraction,
    pub up: usize,
    pub down: usize,
    /// Mean of (up − down) per word.
    #[serde(serialize_with = "fraction::serialize")]
    pub mean_difference: Fraction,
}

pub fn braid_move_stats(words: &[Word]) -> Result<BraidMoveStats> {
    if words.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (mut up, mut down) = (0usize, 0usize);
    for w in words {
        for site in list_moves(w) {
            match site.kind {
                MoveKind::BraidUp => up += 1,
                MoveKind::BraidDown => down += 1,
                MoveKind::Commutation => {}
            }
        }
    }
    let total = up + down;
    Ok(BraidMoveStats {
        words: words.len(),
        total,
        mean: fraction::mean(total as i64, words.len()),
        up,
        down,
        mean_difference: fraction::mean(up as i64 - down as i64, words.len()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str, rank: usize) -> Word {
        Word::parse(s, rank).unwrap()
    }

    #[test]
    fn constructors() {
        assert!(make_reduced_word(&[1, 2, 1], 3).is_ok());
        assert_eq!(make_reduced_word(&[1, 1], 3), Err(Error::NotReduced));
        assert!(make_reduced_word(&[1, 2, 3, 4, 1, 2, 3, 1, 2, 1], 5).is_ok());
        assert_eq!(make_reduced_word(&[3], 3), Err(Error::LetterOutOfRange { letter: 3, rank: 3 }));
        assert_eq!(make_word(&[1, 1], 3), Err(Error::QuadraticRule { letter: 1, position: 1 }));
        // non-reduced but free of `aa`
        assert!(make_word(&[1, 2, 3, 1, 2, 3, 1, 2, 1], 4).is_ok());
        assert!(make_reduced_word(&[1, 2, 3, 1, 2, 3, 1, 2, 1], 4).is_err());
    }

    #[test]
    fn permutations_of_words() {
        assert_eq!(word_to_permutation(&[], 3), Permutation::identity(3));
        assert_eq!(word_to_permutation(&[1], 3).images(), &[2, 1, 3]);
        assert_eq!(word_to_permutation(&[1, 2, 1], 3), Permutation::longest(3));
        assert!(is_reduced(&[1, 2, 1], 3));
        assert!(!is_reduced(&[1, 2, 1, 2], 3));
        assert!(is_reduced(&[2, 1, 2], 3));
    }

    #[test]
    fn canonical_words() {
        assert_eq!(staircase_word(3).letters(), &[1, 2, 1]);
        assert_eq!(staircase_word(4).letters(), &[1, 2, 3, 1, 2, 1]);
        assert_eq!(staircase_word(5).letters(), &[1, 2, 3, 4, 1, 2, 3, 1, 2, 1]);
        assert_eq!(trapezoid_word(1).letters(), &[1, 2, 3, 1]);
        assert_eq!(trapezoid_word(2).letters(), &[1, 2, 3, 1, 4, 2, 5, 3, 1]);
        for n in 1..=4 {
            let t = trapezoid_word(n);
            assert_eq!(t.len(), (n + 1) * (n + 1));
            assert!(t.is_reduced(), "trapezoid word {n} must be reduced");
        }
    }

    #[test]
    fn moves_and_application() {
        assert_eq!(w("121", 3).moves(), vec![MoveSite { position: 1, kind: MoveKind::BraidUp }]);
        assert_eq!(w("13", 4).moves(), vec![MoveSite { position: 1, kind: MoveKind::Commutation }]);
        let braids: Vec<_> = staircase_word(5).moves().into_iter().filter(|m| m.kind.is_braid()).collect();
        assert_eq!(braids, vec![MoveSite { position: 8, kind: MoveKind::BraidUp }]);

        let site = MoveSite { position: 1, kind: MoveKind::BraidUp };
        let moved = apply_move(&w("121", 3), site).unwrap();
        assert_eq!(moved, w("212", 3));
        assert_eq!(apply_move(&moved, mirrored(site)).unwrap(), w("121", 3));
        assert_eq!(apply_move(&w("1324", 5), MoveSite { position: 1, kind: MoveKind::Commutation }).unwrap(), w("3124", 5));
        assert!(apply_move(&w("12", 3), MoveSite { position: 1, kind: MoveKind::Commutation }).is_err());
    }

    #[test]
    fn classes_and_graphs() {
        assert_eq!(commutation_class(&staircase_word(5)).unwrap().len(), 12);
        assert_eq!(commutation_class(&w("121", 3)).unwrap(), vec![w("121", 3)]);
        assert_eq!(all_reduced_words(&Permutation::longest(3)).unwrap(), vec![w("121", 3), w("212", 3)]);
        assert_eq!(all_reduced_words(&Permutation::longest(4)).unwrap().len(), 16);

        let g3 = matsumoto_graph(&Permutation::longest(3)).unwrap();
        assert_eq!(g3.vertices.len(), 2);
        assert_eq!(g3.edges, vec![(0, 1, EdgeKind::Braid)]);
        let g4 = matsumoto_graph(&Permutation::longest(4)).unwrap();
        assert_eq!(g4.vertices.len(), 16);
        assert_eq!(g4.braid_edge_count(), 8);
        assert!(g4.is_connected());
    }

    #[test]
    fn explosion_guard_trips() {
        assert_eq!(commutation_class_capped(&staircase_word(5), 5), Err(Error::ExplosionGuard { cap: 5 }));
    }

    #[test]
    fn stats() {
        let s = braid_move_stats(&commutation_class(&staircase_word(5)).unwrap()).unwrap();
        assert_eq!((s.words, s.total), (12, 12));
        assert_eq!(s.mean, Fraction::from_integer(1));
        let pair = braid_move_stats(&[w("121", 3), w("212", 3)]).unwrap();
        assert_eq!(pair.mean, Fraction::from_integer(1));
        assert_eq!(braid_move_stats(&[]), Err(Error::EmptyInput));

        let skew = commutation_class(&w("123123121", 4)).unwrap();
        let names: Vec<String> = skew.iter().map(|w| w.to_string()).collect();
        assert_eq!(names, ["121321321", "121323121", "123121321", "123123121"]);
        let s = braid_move_stats(&skew).unwrap();
        assert_eq!((s.up, s.down), (5, 1));
        assert_eq!(s.mean_difference, Fraction::from_integer(1));
    }

    #[test]
    fn display_and_parse() {
        assert_eq!(w("1231423121", 5).to_string(), "1231423121");
        let big = Word::new(vec![1, 10, 3], 12).unwrap();
        assert_eq!(big.to_string(), "1,10,3");
        assert_eq!(Word::parse("1,10,3", 12).unwrap(), big);
        assert_eq!("121".parse::<Word>().unwrap().rank(), 3);
    }

    #[test]
    fn word_tau_swaps_only_commuting_letters() {
        let word = w("1231423121", 5);
        assert_eq!(word.tau(3).unwrap().to_string(), "1213423121");
        assert_eq!(word.tau(1).unwrap(), word);
        assert!(word.tau(10).is_err());
    }
}
