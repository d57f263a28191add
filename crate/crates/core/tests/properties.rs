use std::sync::Arc;

use braidhooks::fraction::{format_fraction, parse_fraction};
use braidhooks::homomesy::{orbit_of, random_tableau, tau_parity, OrbitMode, Parity};
use braidhooks::posets::{descents, linear_extensions, order_ideals, random_bounded_poset, tau_on_extension};
use braidhooks::tableaux::{
    crossings, evacuation, inverse_promotion, promotion, promotion_jdt, tau, CrossingDirection, Shape, Tableau,
};
use braidhooks::words::{apply_move, list_moves, mirrored, Permutation, Word};
use braidhooks::Fraction;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn staircase(n: usize) -> Arc<Shape> {
    let parts: Vec<usize> = (1..=n).rev().collect();
    Arc::new(Shape::right(&parts).unwrap())
}

/// A reduced word reached by a random walk of moves from a reduced word of a random permutation.
fn walked_word(images: Vec<usize>, steps: Vec<usize>) -> Word {
    let mut w = Permutation::from_images(images).unwrap().some_reduced_word();
    for s in steps {
        let moves = list_moves(&w);
        if !moves.is_empty() {
            w = apply_move(&w, moves[s % moves.len()]).unwrap();
        }
    }
    w
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn moves_undo_and_keep_the_permutation(
        images in (2usize..=7).prop_flat_map(permutation),
        steps in prop::collection::vec(0usize..64, 0..20),
    ) {
        let w = walked_word(images.clone(), steps);
        prop_assert_eq!(w.permutation().images().to_vec(), images);
        prop_assert!(w.is_reduced());
        for site in list_moves(&w) {
            let v = apply_move(&w, site).unwrap();
            prop_assert_eq!(apply_move(&v, mirrored(site)).unwrap(), w.clone());
        }
        let text = w.to_string();
        prop_assert_eq!(Word::parse(&text, w.rank()).unwrap(), w);
    }

    #[test]
    fn word_toggles_are_involutions(
        images in (3usize..=7).prop_flat_map(permutation),
        steps in prop::collection::vec(0usize..64, 0..10),
    ) {
        let w = walked_word(images, steps);
        for i in 1..w.len() {
            prop_assert_eq!(w.tau(i).unwrap().tau(i).unwrap(), w.clone());
        }
        for p in [Parity::Odd, Parity::Even] {
            prop_assert_eq!(tau_parity(&tau_parity(&w, p), p), w.clone());
        }
    }

    #[test]
    fn large_staircase_operators(n in 4usize..=8, seed in any::<u64>()) {
        let t = random_tableau(&staircase(n), &mut ChaCha8Rng::seed_from_u64(seed));
        let p = promotion(&t);
        prop_assert_eq!(&promotion_jdt(&t).0, &p);
        prop_assert_eq!(inverse_promotion(&p), t.clone());
        prop_assert_eq!(evacuation(&evacuation(&t)), t.clone());
        for i in 1..t.size() {
            prop_assert_eq!(tau(&tau(&t, i).unwrap(), i).unwrap(), t.clone());
        }
        // one crossing, always from right to left
        let c = crossings(&t);
        prop_assert_eq!(c.len(), 1);
        prop_assert_eq!(c[0].direction, CrossingDirection::RtoL);
        prop_assert_eq!(Tableau::from_json(&t.to_json()).unwrap(), t.clone());
        prop_assert_eq!(Tableau::parse_text(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn orbits_are_closed(n in 4usize..=7, seed in any::<u64>()) {
        let t = random_tableau(&staircase(n), &mut ChaCha8Rng::seed_from_u64(seed));
        let orbit = orbit_of(&t, OrbitMode::Dihedral);
        prop_assert!(orbit.members.binary_search(&t).is_ok());
        for m in &orbit.members {
            for p in [Parity::Odd, Parity::Even] {
                prop_assert!(orbit.members.binary_search(&tau_parity(m, p)).is_ok());
            }
        }
    }

    #[test]
    fn poset_toggles_and_descents(n in 2usize..=7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Arc::new(random_bounded_poset(n, 0.4, &mut rng));
        let all = linear_extensions(&p, 1 << 16).unwrap();
        let ideals = order_ideals(&p, 1 << 16).unwrap();
        for l in &all {
            for i in 1..n {
                let m = tau_on_extension(l, i).unwrap();
                prop_assert!(all.contains(&m));
                prop_assert_eq!(tau_on_extension(&m, i).unwrap(), l.clone());
            }
            for ideal in &ideals {
                for x in descents(l, ideal) {
                    prop_assert!(ideal.contains(x));
                    let next = l.element(l.label(x) + 1);
                    prop_assert!(p.is_cover(x, next) && !ideal.contains(next));
                }
            }
        }
    }

    #[test]
    fn fractions_round_trip(p in -1000i64..1000, q in 1i64..1000) {
        let f = Fraction::new(p, q);
        prop_assert_eq!(parse_fraction(&format_fraction(&f)), Some(f));
    }
}
