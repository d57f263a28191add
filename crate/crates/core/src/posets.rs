//! Finite posets, linear extensions, order ideals and the descent statistic
//! `des_I` with its orbit-preserving bijection `Φ`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use itertools::Itertools;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fraction::{self, Fraction};
use crate::heaps::HeapPoset;
use crate::homomesy::{dihedral_orbits, orbit_index, tau_parity, window_step_back, OrbitMode, Parity, TauCarrier};

/// Posets are stored as bitmasks, so at most this many elements.
pub const MAX_ELEMENTS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    /// `(lower, upper)`, sorted; the transitive reduction.
    covers: Vec<(usize, usize)>,
    /// `strictly_below[q]` has bit `p` set when `p < q`.
    strictly_below: Vec<u64>,
    minimum: Option<usize>,
    maximum: Option<usize>,
}

impl Poset {
    /// Builds the poset generated by `relations` (`(lower, upper)` pairs).
    pub fn new(names: Vec<String>, relations: &[(usize, usize)]) -> Result<Poset> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::Parse(format!("at most {MAX_ELEMENTS} elements are supported")));
        }
        let mut below = vec![0u64; n];
        for &(p, q) in relations {
            if p >= n || q >= n {
                return Err(Error::UnknownElement(format!("#{}", p.max(q))));
            }
            below[q] |= 1 << p;
        }
        // Warshall closure on bitmasks
        for k in 0..n {
            for q in 0..n {
                if below[q] >> k & 1 == 1 {
                    below[q] |= below[k];
                }
            }
        }
        if (0..n).any(|q| below[q] >> q & 1 == 1) {
            return Err(Error::PosetCycle);
        }
        let mut covers = Vec::new();
        for q in 0..n {
            for p in bits(below[q]) {
                let between = below[q] & !(1 << p);
                if bits(between).all(|r| below[r] >> p & 1 == 0) {
                    covers.push((p, q));
                }
            }
        }
        covers.sort_unstable();
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let minimum = (0..n).find(|&m| (0..n).all(|q| q == m || below[q] >> m & 1 == 1));
        let maximum = (0..n).find(|&m| below[m] | 1 << m == full);
        Ok(Poset { names, covers, strictly_below: below, minimum, maximum })
    }

    /// Lines `a < b`; a line holding a single name declares an isolated
    /// element. Blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Poset> {
        let mut names: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut intern = |name: &str| -> Result<usize> {
            if name.is_empty() || name.contains(char::is_whitespace) {
                return Err(Error::Parse(format!("bad element name `{name}`")));
            }
            Ok(*index.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                names.len() - 1
            }))
        };
        let mut relations = Vec::new();
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split('<').map(str::trim).collect();
            let ids: Vec<usize> = parts.iter().map(|p| intern(p)).collect::<Result<_>>()?;
            relations.extend(ids.iter().copied().tuple_windows::<(usize, usize)>());
        }
        if names.is_empty() {
            return Err(Error::EmptyInput);
        }
        Poset::new(names, &relations)
    }

    pub fn chain(n: usize) -> Poset {
        let rel: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::new(numbered(n), &rel).expect("a chain is acyclic")
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::new(numbered(n), &[]).expect("an antichain is acyclic")
    }

    /// `0 < a, b < 1`.
    pub fn diamond() -> Poset {
        Poset::parse("0 < a < 1\n0 < b < 1").expect("valid literal")
    }

    /// The underlying poset of a heap; elements are named by their index.
    pub fn from_heap(heap: &HeapPoset) -> Poset {
        Poset::new(numbered(heap.len()), heap.covers()).expect("heaps are acyclic")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, element: usize) -> &str {
        &self.names[element]
    }

    pub fn element(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `p < q`.
    pub fn less(&self, p: usize, q: usize) -> bool {
        self.strictly_below[q] >> p & 1 == 1
    }

    pub fn comparable(&self, p: usize, q: usize) -> bool {
        p == q || self.less(p, q) || self.less(q, p)
    }

    /// `p ⋖ q`.
    pub fn is_cover(&self, p: usize, q: usize) -> bool {
        self.covers.binary_search(&(p, q)).is_ok()
    }

    pub fn minimum(&self) -> Option<usize> {
        self.minimum
    }

    pub fn maximum(&self) -> Option<usize> {
        self.maximum
    }

    pub fn is_bounded(&self) -> bool {
        self.minimum.is_some() && self.maximum.is_some()
    }

    fn down_mask(&self, q: usize) -> u64 {
        self.strictly_below[q]
    }
}

impl fmt::Display for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(p, q) in &self.covers {
            writeln!(f, "{} < {}", self.names[p], self.names[q])?;
        }
        for e in 0..self.len() {
            if !self.covers.iter().any(|&(p, q)| p == e || q == e) {
                writeln!(f, "{}", self.names[e])?;
            }
        }
        Ok(())
    }
}

fn numbered(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |&i| mask >> i & 1 == 1)
}

/// A labelling `L: P → {1..n}` respecting the order.
#[derive(Clone)]
pub struct LinearExtension {
    poset: Arc<Poset>,
    /// `labels[p] = L(p)`.
    labels: Vec<u16>,
    /// `order[v − 1] = L⁻¹(v)`.
    order: Vec<u16>,
}

impl LinearExtension {
    /// Builds `L` from the elements listed in increasing label order.
    pub fn from_order(poset: Arc<Poset>, order: Vec<usize>) -> Result<LinearExtension> {
        let n = poset.len();
        if order.len() != n || order.iter().copied().collect::<BTreeSet<_>>().len() != n || order.iter().any(|&e| e >= n)
        {
            return Err(Error::Parse("an extension lists every element once".into()));
        }
        for (i, &q) in order.iter().enumerate() {
            if order[i + 1..].iter().any(|&p| poset.less(p, q)) {
                return Err(Error::Parse(format!("order violated at `{}`", poset.name(q))));
            }
        }
        let mut labels = vec![0u16; n];
        for (i, &e) in order.iter().enumerate() {
            labels[e] = (i + 1) as u16;
        }
        Ok(LinearExtension { poset, labels, order: order.into_iter().map(|e| e as u16).collect() })
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    /// `L(p)`.
    pub fn label(&self, p: usize) -> usize {
        self.labels[p] as usize
    }

    /// `L⁻¹(v)` for `1 ≤ v ≤ n`.
    pub fn element(&self, v: usize) -> usize {
        self.order[v - 1] as usize
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// Element names in label order.
    pub fn to_text(&self) -> String {
        self.order.iter().map(|&e| self.poset.name(e as usize)).join(" ")
    }

    fn swap_values(&mut self, i: usize) {
        let (p, q) = (self.order[i - 1] as usize, self.order[i] as usize);
        if !self.poset.comparable(p, q) {
            self.order.swap(i - 1, i);
            self.labels[p] = (i + 1) as u16;
            self.labels[q] = i as u16;
        }
    }
}

impl PartialEq for LinearExtension {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for LinearExtension {}

impl Hash for LinearExtension {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.labels.hash(state);
    }
}

impl PartialOrd for LinearExtension {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinearExtension {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.order.cmp(&other.order)
    }
}

impl fmt::Debug for LinearExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearExtension({})", self.to_text())
    }
}

impl TauCarrier for LinearExtension {
    fn degree(&self) -> usize {
        self.labels.len()
    }

    fn toggle_in_place(&mut self, i: usize) {
        self.swap_values(i);
    }
}

/// All linear extensions in lexicographic order of `L⁻¹`.
pub fn linear_extensions(poset: &Arc<Poset>, cap: usize) -> Result<Vec<LinearExtension>> {
    let n = poset.len();
    let mut out = Vec::new();
    let mut order = Vec::with_capacity(n);
    extend(poset, 0, &mut order, &mut out, cap)?;
    Ok(out)
}

fn extend(
    poset: &Arc<Poset>,
    placed: u64,
    order: &mut Vec<usize>,
    out: &mut Vec<LinearExtension>,
    cap: usize,
) -> Result<()> {
    let n = poset.len();
    if order.len() == n {
        if out.len() >= cap {
            return Err(Error::ExplosionGuard { cap });
        }
        let mut labels = vec![0u16; n];
        for (i, &e) in order.iter().enumerate() {
            labels[e] = (i + 1) as u16;
        }
        out.push(LinearExtension {
            poset: poset.clone(),
            labels,
            order: order.iter().map(|&e| e as u16).collect(),
        });
        return Ok(());
    }
    for e in 0..n {
        if placed >> e & 1 == 0 && poset.down_mask(e) & !placed == 0 {
            order.push(e);
            extend(poset, placed | 1 << e, order, out, cap)?;
            order.pop();
        }
    }
    Ok(())
}

/// A downward-closed subset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderIdeal {
    mask: u64,
}

impl OrderIdeal {
    pub fn new(poset: &Poset, members: &[usize]) -> Result<OrderIdeal> {
        let mut mask = 0u64;
        for &m in members {
            if m >= poset.len() {
                return Err(Error::UnknownElement(format!("#{m}")));
            }
            mask |= 1 << m;
        }
        if bits(mask).any(|q| poset.down_mask(q) & !mask != 0) {
            return Err(Error::NotAnIdeal);
        }
        Ok(OrderIdeal { mask })
    }

    /// Comma-separated element names.
    pub fn parse(poset: &Poset, text: &str) -> Result<OrderIdeal> {
        let members: Vec<usize> = text
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|name| poset.element(name))
            .collect::<Result<_>>()?;
        OrderIdeal::new(poset, &members)
    }

    /// The smallest ideal containing `generators`.
    pub fn generated(poset: &Poset, generators: &[usize]) -> OrderIdeal {
        let mask = generators.iter().fold(0u64, |m, &g| m | 1 << g | poset.down_mask(g));
        OrderIdeal { mask }
    }

    pub fn contains(&self, p: usize) -> bool {
        self.mask >> p & 1 == 1
    }

    pub fn members(&self) -> Vec<usize> {
        bits(self.mask).collect()
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn is_proper(&self, poset: &Poset) -> bool {
        !self.is_empty() && self.len() != poset.len()
    }

    pub fn to_text(&self, poset: &Poset) -> String {
        self.members().into_iter().map(|p| poset.name(p)).join(",")
    }
}

/// All order ideals, from `∅` upward, ordered by bitmask.
pub fn order_ideals(poset: &Poset, cap: usize) -> Result<Vec<OrderIdeal>> {
    let n = poset.len();
    let mut out = Vec::new();
    let mut stack = vec![(0usize, 0u64)];
    // branch on each element in index order; an element may join only if
    // everything below it with a smaller index already has
    while let Some((next, mask)) = stack.pop() {
        if next == n {
            if bits(mask).all(|q| poset.down_mask(q) & !mask == 0) {
                if out.len() >= cap {
                    return Err(Error::ExplosionGuard { cap });
                }
                out.push(OrderIdeal { mask });
            }
            continue;
        }
        stack.push((next + 1, mask));
        stack.push((next + 1, mask | 1 << next));
    }
    out.sort();
    Ok(out)
}

/// `des_I(L)`: elements `p ∈ I` covered by `L⁻¹(L(p)+1)`, which lies outside `I`.
pub fn descents(l: &LinearExtension, ideal: &OrderIdeal) -> Vec<usize> {
    let n = l.labels.len();
    ideal
        .members()
        .into_iter()
        .filter(|&p| {
            let v = l.label(p);
            v < n && {
                let q = l.element(v + 1);
                !ideal.contains(q) && l.poset.is_cover(p, q)
            }
        })
        .collect()
}

pub fn descent_count(l: &LinearExtension, ideal: &OrderIdeal) -> i64 {
    descents(l, ideal).len() as i64
}

/// Swaps the labels `i` and `i+1` when the result is still an extension.
pub fn tau_on_extension(l: &LinearExtension, i: usize) -> Result<LinearExtension> {
    if i == 0 || i >= l.labels.len() {
        return Err(Error::IndexOutOfRange { index: i, max: l.labels.len().saturating_sub(1) });
    }
    let mut out = l.clone();
    out.swap_values(i);
    Ok(out)
}

fn check_bounded(poset: &Poset, ideal: &OrderIdeal) -> Result<()> {
    if !poset.is_bounded() {
        return Err(Error::PosetLacksBounds);
    }
    if !ideal.is_proper(poset) {
        return Err(Error::TrivialIdeal);
    }
    Ok(())
}

/// `Φ(p, L) = L.τ_{o(L(p))} ⋯ τ_{o(1)}`.
pub fn poset_phi(p: usize, l: &LinearExtension, ideal: &OrderIdeal) -> Result<LinearExtension> {
    check_bounded(l.poset(), ideal)?;
    if !descents(l, ideal).contains(&p) {
        return Err(Error::NotADescent);
    }
    Ok(window_step_back(l, l.label(p)))
}

/// Recovers `(p, L)` from `Φ(p, L)` by walking `L_k = L.τ_{o(1)} ⋯ τ_{o(k−1)}`
/// until the element labelled `k−1` lies in `I` while the one labelled `k`
/// does not.
pub fn poset_phi_inverse(l: &LinearExtension, ideal: &OrderIdeal) -> Result<(usize, LinearExtension)> {
    check_bounded(l.poset(), ideal)?;
    let n = l.labels.len();
    let mut previous = l.clone();
    for k in 2..=n {
        let current = tau_parity(&previous, Parity::of_step(k - 1));
        if ideal.contains(previous.element(k - 1)) && !ideal.contains(current.element(k)) {
            let p = current.element(k - 1);
            if descents(&current, ideal).contains(&p) {
                return Ok((p, current));
            }
            return Err(Error::NoPreimage);
        }
        previous = current;
    }
    Err(Error::NoPreimage)
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitDescents {
    pub size: usize,
    pub descents: i64,
    #[serde(serialize_with = "fraction::serialize")]
    pub average: Fraction,
    pub representative: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct EdgesReport {
    pub ideal: String,
    /// `|𝓛(P)|`.
    pub lhs: usize,
    /// `Σ_L |des_I(L)|`.
    pub rhs: usize,
    pub phi_bijective: bool,
    pub phi_preserves_orbits: bool,
    pub per_orbit: Vec<OrbitDescents>,
    pub ok: bool,
}

/// Counts both sides of the descent identity, checks that `Φ` is an
/// orbit-preserving bijection, and averages `|des_I|` over each orbit.
pub fn verify_edges(poset: &Arc<Poset>, ideal: &OrderIdeal, cap: usize) -> Result<EdgesReport> {
    check_bounded(poset, ideal)?;
    let all = linear_extensions(poset, cap)?;
    let orbits = dihedral_orbits(&all, OrbitMode::Dihedral);
    let orbit_of = orbit_index(&orbits);
    let mut rhs = 0;
    let mut images = BTreeSet::new();
    let mut preserves = true;
    let mut inverse_ok = true;
    for l in &all {
        for p in descents(l, ideal) {
            rhs += 1;
            let image = poset_phi(p, l, ideal)?;
            preserves &= orbit_of.get(&image) == orbit_of.get(l);
            inverse_ok &= poset_phi_inverse(&image, ideal).ok() == Some((p, l.clone()));
            images.insert(image);
        }
    }
    let bijective = inverse_ok && images.len() == rhs && images.len() == all.len();
    let per_orbit: Vec<OrbitDescents> = orbits
        .iter()
        .map(|o| {
            let total: i64 = o.members.iter().map(|l| descent_count(l, ideal)).sum();
            OrbitDescents {
                size: o.len(),
                descents: total,
                average: fraction::mean(total, o.len()),
                representative: o.representative().to_text(),
            }
        })
        .collect();
    let homomesic = per_orbit.iter().all(|o| o.average == Fraction::from_integer(1));
    Ok(EdgesReport {
        ideal: ideal.to_text(poset),
        lhs: all.len(),
        rhs,
        phi_bijective: bijective,
        phi_preserves_orbits: preserves,
        ok: all.len() == rhs && bijective && preserves && homomesic,
        per_orbit,
    })
}

/// A bounded poset on `n ≥ 2` elements: a random acyclic relation on the
/// `n − 2` inner elements (each pair related with probability `density`),
/// below a forced maximum and above a forced minimum.
pub fn random_bounded_poset<R: Rng>(n: usize, density: f64, rng: &mut R) -> Poset {
    assert!(n >= 2, "a bounded poset with distinct bounds needs two elements");
    let inner = n - 2;
    let mut relations = Vec::new();
    for q in 1..=inner {
        relations.push((0, q));
        relations.push((q, n - 1));
        for p in 1..q {
            if rng.gen_bool(density) {
                relations.push((p, q));
            }
        }
    }
    if inner == 0 {
        relations.push((0, 1));
    }
    let mut names = vec!["bottom".to_string()];
    names.extend((1..=inner).map(|i| format!("x{i}")));
    names.push("top".to_string());
    Poset::new(names, &relations).expect("relations point from lower to higher index")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heaps::shape_poset;
    use crate::tableaux::{count_tableaux, Shape};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const CAP: usize = 1_000_000;

    #[test]
    fn small_families() {
        let chain = Arc::new(Poset::chain(5));
        assert_eq!(linear_extensions(&chain, CAP).unwrap().len(), 1);
        assert_eq!(order_ideals(&chain, CAP).unwrap().len(), 6);
        let anti = Poset::antichain(4);
        assert_eq!(order_ideals(&anti, CAP).unwrap().len(), 16);
        let diamond = Arc::new(Poset::diamond());
        assert!(diamond.is_bounded());
        assert_eq!(linear_extensions(&diamond, CAP).unwrap().len(), 2);
        assert_eq!(order_ideals(&diamond, CAP).unwrap().len(), 6);
        assert!(!anti.is_bounded());
    }

    #[test]
    fn parse_rejects_cycles_and_reduces() {
        assert_eq!(Poset::parse("a < b\nb < a"), Err(Error::PosetCycle));
        let p = Poset::parse("a < b < c\na < c").unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.less(0, 2));
    }

    #[test]
    fn diamond_descents() {
        let d = Arc::new(Poset::diamond());
        let i = OrderIdeal::parse(&d, "0").unwrap();
        let order = ["0", "a", "b", "1"].map(|n| d.element(n).unwrap()).to_vec();
        let l = LinearExtension::from_order(d.clone(), order).unwrap();
        assert_eq!(descents(&l, &i), vec![d.element("0").unwrap()]);
        let flipped = tau_on_extension(&l, 2).unwrap();
        assert_ne!(flipped, l);
        assert_eq!(tau_on_extension(&flipped, 2).unwrap(), l);
        assert_eq!(tau_on_extension(&l, 1).unwrap(), l);
        assert!(OrderIdeal::parse(&d, "a").is_err());
        let report = verify_edges(&d, &i, CAP).unwrap();
        assert_eq!((report.lhs, report.rhs), (2, 2));
        assert_eq!(report.per_orbit.len(), 1);
        assert!(report.ok);
    }

    #[test]
    fn trivial_ideals_have_no_descents() {
        let d = Arc::new(Poset::diamond());
        for l in linear_extensions(&d, CAP).unwrap() {
            assert!(descents(&l, &OrderIdeal::new(&d, &[]).unwrap()).is_empty());
            assert!(descents(&l, &OrderIdeal::new(&d, &[0, 1, 2, 3]).unwrap()).is_empty());
        }
        let full = OrderIdeal::new(&d, &[0, 1, 2, 3]).unwrap();
        assert_eq!(verify_edges(&d, &full, CAP).unwrap_err(), Error::TrivialIdeal);
    }

    #[test]
    fn staircase_cell_poset() {
        let shape = Arc::new(Shape::parse("right:4,3,2,1").unwrap());
        let p = Arc::new(Poset::from_heap(&shape_poset(&shape)));
        assert_eq!(linear_extensions(&p, CAP).unwrap().len() as u64, count_tableaux(&shape));
        let min = OrderIdeal::generated(&p, &[p.minimum().unwrap()]);
        let report = verify_edges(&p, &min, CAP).unwrap();
        assert_eq!((report.lhs, report.rhs), (12, 12));
        assert!(report.ok);
    }

    #[test]
    fn random_posets_are_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in 2..=7 {
            let p = random_bounded_poset(n, 0.4, &mut rng);
            assert_eq!(p.len(), n);
            assert_eq!((p.minimum(), p.maximum()), (Some(0), Some(n - 1)));
        }
    }
}
