//! Brute-force oracles written without the library's algorithms.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use braidhooks::tableaux::Tableau;

/// Cells `(row, col)` of a right-justified diagram, 1-based.
pub fn right_cells(lambda: &[usize]) -> Vec<(usize, usize)> {
    let width = lambda[0];
    lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (width - len + 1..=width).map(move |c| (r + 1, c)))
        .collect()
}

/// Cells of a half-right-justified diagram: row `r` ends one column left of row `r−1`.
pub fn half_cells(lambda: &[usize]) -> Vec<(usize, usize)> {
    let width = lambda[0];
    lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            let end = width - r;
            (end + 1 - len..=end).map(move |c| (r + 1, c))
        })
        .collect()
}

/// Cells of `λ/μ` with both right-justified at column `λ_1`.
pub fn skew_cells(lambda: &[usize], mu: &[usize]) -> Vec<(usize, usize)> {
    let width = lambda[0];
    lambda
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| {
            let cut = mu.get(r).copied().unwrap_or(0);
            (width - len + 1..=width - cut).map(move |c| (r + 1, c))
        })
        .collect()
}

/// Number of standard fillings, by dynamic programming over filled subsets.
pub fn count_fillings(cells: &[(usize, usize)]) -> u64 {
    let n = cells.len();
    assert!(n <= 20);
    let index: HashMap<(usize, usize), usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let preds: Vec<u32> = cells
        .iter()
        .map(|&(r, c)| {
            let mut m = 0u32;
            if let Some(&i) = index.get(&(r, c.wrapping_sub(1))) {
                m |= 1 << i;
            }
            if let Some(&i) = index.get(&(r.wrapping_sub(1), c)) {
                m |= 1 << i;
            }
            m
        })
        .collect();
    let mut ways = vec![0u64; 1 << n];
    ways[0] = 1;
    for mask in 0..(1u32 << n) {
        let w = ways[mask as usize];
        if w == 0 {
            continue;
        }
        for i in 0..n {
            if mask >> i & 1 == 0 && preds[i] & !mask == 0 {
                ways[(mask | 1 << i) as usize] += w;
            }
        }
    }
    ways[(1usize << n) - 1]
}

/// Braid hooks read off from cell coordinates.
pub fn hooks(t: &Tableau, cells: &[(usize, usize)]) -> Vec<usize> {
    let n = cells.len();
    let mut pos = vec![(0, 0); n + 2];
    for &(r, c) in cells {
        pos[t.entry_at(r, c).expect("cell holds an entry")] = (r, c);
    }
    let present: HashSet<(usize, usize)> = cells.iter().copied().collect();
    (2..n)
        .filter(|&k| {
            let (r, c) = pos[k];
            pos[k - 1] == (r, c - 1) && pos[k + 1] == (r + 1, c) && !present.contains(&(r + 1, c - 1))
        })
        .collect()
}

/// All reduced words of the longest element of `𝔖_n`, peeling right descents.
pub fn longest_words(n: usize) -> Vec<Vec<u8>> {
    fn rec(perm: &mut Vec<usize>, suffix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        let descents: Vec<usize> = (0..perm.len() - 1).filter(|&i| perm[i] > perm[i + 1]).collect();
        if descents.is_empty() {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in descents {
            perm.swap(i, i + 1);
            suffix.push(i as u8 + 1);
            rec(perm, suffix, out);
            suffix.pop();
            perm.swap(i, i + 1);
        }
    }
    let mut perm: Vec<usize> = (1..=n).rev().collect();
    let mut out = Vec::new();
    rec(&mut perm, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Words reachable by swapping adjacent letters that differ by at least two.
pub fn commutation_closure(start: &[u8]) -> BTreeSet<Vec<u8>> {
    let mut seen = BTreeSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(w) = queue.pop_front() {
        for i in 0..w.len().saturating_sub(1) {
            if w[i].abs_diff(w[i + 1]) >= 2 {
                let mut v = w.clone();
                v.swap(i, i + 1);
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
        }
    }
    seen
}

/// `(up, down)` braid factors: `a(a+1)a` and `(a+1)a(a+1)`.
pub fn braid_factors(w: &[u8]) -> (usize, usize) {
    let mut up = 0;
    let mut down = 0;
    for f in w.windows(3) {
        if f[0] == f[2] && f[1] == f[0] + 1 {
            up += 1;
        } else if f[0] == f[2] && f[0] == f[1] + 1 {
            down += 1;
        }
    }
    (up, down)
}

/// `s_1 s_2 ⋯ s_{n−1} s_1 ⋯ s_{n−2} ⋯ s_1`.
pub fn staircase_letters(n: usize) -> Vec<u8> {
    (1..n).rev().flat_map(|top| 1..=top as u8).collect()
}

/// All partitions of `n`.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
        }
        for p in 1..=max.min(left) {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

pub fn hook_condition(lambda: &[usize]) -> bool {
    lambda.last() == Some(&1) && (lambda.len() < 2 || lambda[0] > lambda[1])
}

pub fn notation(mode: &str, lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|p| p.to_string()).collect();
    format!("{mode}:{}", parts.join(","))
}
