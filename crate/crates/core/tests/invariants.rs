//! Exhaustive structural invariants over every small shape and word.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use braidhooks::heaps::{heap_poset, shape_class, shape_poset};
use braidhooks::homomesy::{big_phi, big_phi_inverse, dihedral_orbits, is_braid_at, orbit_index, tau_parity, OrbitMode, Parity};
use braidhooks::posets::{linear_extensions, Poset};
use braidhooks::tableaux::{
    braid_hooks, crossings, dual_evacuation, enumerate, evacuation, inverse_promotion, inverse_promotion_jdt,
    inverse_promotion_path, partial_inverse_promotion, partial_promotion, phi, phi_inverse, promotion,
    promotion_path, psi, staircase_pair, tau, Shape, Tableau,
};
use braidhooks::words::{
    all_reduced_words, apply_move, commutation_class, list_moves, matsumoto_graph, mirrored, staircase_word,
    Permutation, Word,
};
use common::{hook_condition, partitions, notation};

fn shape(notation: &str) -> Arc<Shape> {
    Arc::new(Shape::parse(notation).unwrap())
}

fn right_shapes(max: usize) -> Vec<(Vec<usize>, Arc<Shape>)> {
    (1..=max).flat_map(partitions).map(|p| (p.clone(), shape(&notation("right", &p)))).collect()
}

fn half_shapes(max: usize) -> Vec<Arc<Shape>> {
    (1..=max)
        .flat_map(partitions)
        .filter(|p| p.windows(2).all(|w| w[0] > w[1]))
        .map(|p| shape(&notation("half", &p)))
        .collect()
}

#[test]
fn moves_are_involutions_and_preserve_the_permutation() {
    for n in 1..=4 {
        for perm in Permutation::all(n) {
            let words = all_reduced_words(&perm).unwrap();
            for w in &words {
                assert_eq!(w.permutation(), perm);
                for site in list_moves(w) {
                    let v = apply_move(w, site).unwrap();
                    assert_eq!(v.permutation(), perm);
                    assert_eq!(apply_move(&v, mirrored(site)).unwrap(), *w);
                }
            }
            assert!(matsumoto_graph(&perm).unwrap().is_connected(), "{perm:?}");
        }
    }
}

#[test]
fn heaps_are_constant_on_commutation_classes() {
    for n in 1..=4 {
        for perm in Permutation::all(n) {
            let mut remaining: BTreeSet<Word> = all_reduced_words(&perm).unwrap().into_iter().collect();
            while let Some(w) = remaining.pop_first() {
                let class = commutation_class(&w).unwrap();
                let form = heap_poset(&w).canonical_form();
                for v in &class {
                    assert_eq!(heap_poset(v).canonical_form(), form);
                    remaining.remove(v);
                }
            }
        }
    }
    for n in 2..=6 {
        let class = commutation_class(&staircase_word(n)).unwrap();
        let form = heap_poset(&class[0]).canonical_form();
        assert!(class.iter().all(|w| heap_poset(w).canonical_form() == form));
    }
}

#[test]
fn extension_counts_match_tableau_counts() {
    let mut shapes: Vec<Arc<Shape>> = right_shapes(9).into_iter().map(|(_, s)| s).collect();
    shapes.extend(half_shapes(10));
    shapes.push(shape("skew:4,3,2,1/1"));
    for s in shapes {
        let p = Arc::new(Poset::from_heap(&shape_poset(&s)));
        assert_eq!(linear_extensions(&p, 1 << 20).unwrap().len(), enumerate(&s).len(), "{s}");
    }
}

#[test]
fn toggles_and_promotions_invert() {
    let mut shapes: Vec<Arc<Shape>> = right_shapes(12).into_iter().map(|(_, s)| s).collect();
    shapes.extend(half_shapes(12));
    for s in shapes {
        for t in enumerate(&s) {
            for i in 1..t.size() {
                assert_eq!(tau(&tau(&t, i).unwrap(), i).unwrap(), t);
            }
            assert_eq!(inverse_promotion_jdt(&t).0, inverse_promotion(&t));
            assert_eq!(promotion(&inverse_promotion(&t)), t);
            for p in [Parity::Odd, Parity::Even] {
                assert_eq!(tau_parity(&tau_parity(&t, p), p), t);
            }
        }
    }
}

/// `𝓛` steps `x → c`, `𝓡` steps `c → y` around a square whose fourth cell exists.
fn forbidden_squares(t: &Tableau) -> usize {
    let s = t.shape();
    let l = promotion_path(t);
    let r = inverse_promotion_path(t);
    let mut found = 0;
    for w in l.cells().windows(2) {
        let (x, c) = (w[0], w[1]);
        if s.right_of(x) == Some(c) && s.below(x).is_some() {
            found += s.below(c).is_some_and(|y| r.has_step(c, y)) as usize;
        }
        if s.below(x) == Some(c) && s.right_of(x).is_some() {
            found += s.right_of(c).is_some_and(|y| r.has_step(c, y)) as usize;
        }
    }
    found
}

#[test]
fn right_shapes_avoid_forbidden_squares() {
    for (_, s) in right_shapes(12) {
        for t in enumerate(&s) {
            assert_eq!(forbidden_squares(&t), 0, "{t:?}");
        }
    }
}

#[test]
fn phi_round_trips_and_the_square_commutes() {
    for (lambda, s) in right_shapes(12) {
        if !hook_condition(&lambda) || s.size() < 3 {
            continue;
        }
        for t in enumerate(&s) {
            let (k, pre) = phi_inverse(&t).unwrap();
            assert_eq!(phi(k, &pre).unwrap(), t);
            for k in braid_hooks(&t) {
                let t_l = partial_inverse_promotion(&t, k).unwrap();
                let t_r = partial_promotion(&t, k).unwrap();
                assert_eq!(partial_promotion(&t_l, k).unwrap(), partial_inverse_promotion(&t_r, k).unwrap());
                assert_eq!(promotion(&t_l), t_r);
            }
        }
    }
}

#[test]
fn psi_is_injective_onto_crossing_tableaux() {
    for s in half_shapes(12) {
        let all = enumerate(&s);
        let mut images = BTreeSet::new();
        let mut pairs = 0;
        for t in &all {
            for k in braid_hooks(t) {
                images.insert(psi(k, t).unwrap());
                pairs += 1;
            }
        }
        assert_eq!(images.len(), pairs, "{s}");
        let crossing: BTreeSet<Tableau> = all.iter().filter(|t| !crossings(t).is_empty()).cloned().collect();
        assert_eq!(images, crossing, "{s}");
    }
}

#[test]
fn evacuation_moves_path_ends() {
    let mut shapes: Vec<Arc<Shape>> = right_shapes(10).into_iter().map(|(_, s)| s).collect();
    shapes.extend(half_shapes(12));
    for s in shapes {
        for t in enumerate(&s) {
            assert_eq!(promotion_path(&evacuation(&t)).last(), t.cell_of(t.size()), "{t:?}");
            assert_eq!(inverse_promotion_path(&dual_evacuation(&t)).first(), t.cell_of(1), "{t:?}");
        }
    }
}

#[test]
fn staircase_pair_paths_meet_in_the_middle() {
    for s in half_shapes(10) {
        for t in enumerate(&s) {
            let n = t.size();
            let pair = staircase_pair(&t).unwrap();
            assert!(inverse_promotion_path(&pair).contains(pair.cell_of(n)), "{t:?}");
            assert!(promotion_path(&pair).contains(pair.cell_of(n + 1)), "{t:?}");
        }
    }
}

#[test]
fn big_phi_is_injective_and_onto_exactly_under_the_shape_condition() {
    for (lambda, s) in right_shapes(12) {
        if s.size() < 3 {
            continue;
        }
        let class = shape_class(&s).unwrap();
        let orbits = dihedral_orbits(&class, OrbitMode::Dihedral);
        let orbit_of: HashMap<Word, usize> = orbit_index(&orbits);
        let mut images = BTreeSet::new();
        let mut pairs = 0;
        for w in &class {
            for k in (2..w.len()).filter(|&k| is_braid_at(w, k)) {
                let image = big_phi(k, w).unwrap();
                assert_eq!(orbit_of[&image], orbit_of[w]);
                assert_eq!(big_phi_inverse(&image).unwrap(), (k, w.clone()));
                images.insert(image);
                pairs += 1;
            }
        }
        assert_eq!(images.len(), pairs, "{lambda:?}");
        assert_eq!(images.len() == class.len(), hook_condition(&lambda), "{lambda:?}");
    }
}

#[test]
fn comparison_lemma() {
    for (lambda, s) in right_shapes(12) {
        for w in shape_class(&s).unwrap() {
            let n = w.len();
            for i in 2..n.saturating_sub(1) {
                let v = tau_parity(&w, Parity::of_step(i + 1));
                let left = w.at(i - 1) < w.at(i + 1);
                let right = v.at(i) <= v.at(i + 2);
                assert_eq!(left, right, "{lambda:?} {w} i={i}");
            }
        }
    }
}
