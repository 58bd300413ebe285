//! Randomized properties of promotion, rectification, the crystal
//! operators and the character oracle.

use proptest::prelude::*;
use symplectic_branching::character::{
    branching_rule, reassembled_dimension, restricted_gl_character, sp_character, Character,
};
use symplectic_branching::crystal::{wt_gl, Crystal, Rank, Tensor};
use symplectic_branching::enumerate::ssyt_count;
use symplectic_branching::insertion::{column_star, insertion_tableau};
use symplectic_branching::jdt::{rect_with, res, restrict};
use symplectic_branching::promotion::{inverse, phi, pr, pr_inv, psi, res_via_promotion, Bijection};
use symplectic_branching::shape::is_vertical_strip;
use symplectic_branching::{Partition, Tableau, Word};

fn rank(n: usize) -> Rank {
    Rank::new(n).unwrap()
}

/// Semistandard tableaux with entries in `[lo, hi]` and at most `len` boxes.
fn tableau(lo: u32, hi: u32, len: usize) -> impl Strategy<Value = Tableau> {
    prop::collection::vec(lo..=hi, 0..=len).prop_map(|w| insertion_tableau(&Word(w)))
}

fn partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

/// A signed permutation of `n` coordinates.
fn weyl_element(n: usize) -> impl Strategy<Value = (Vec<usize>, Vec<i32>)> {
    (Just((0..n).collect::<Vec<_>>()).prop_shuffle(), prop::collection::vec(prop::bool::ANY, n))
        .prop_map(|(perm, flips)| (perm, flips.into_iter().map(|f| if f { -1 } else { 1 }).collect()))
}

fn interval(m: u32) -> impl Strategy<Value = [u32; 4]> {
    prop::array::uniform4(1..=m).prop_map(|mut b| {
        b.sort_unstable();
        b
    })
}

/// Every `a < b`, `c < d` with `c ≥ b + 2` inside `[1, m]`.
fn separated_pairs(m: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 1..=m {
        for b in a + 1..=m {
            for c in b + 2..=m {
                for d in c + 1..=m {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn promotion_round_trips(t in tableau(1, 6, 8), a in 1u32..=6, len in 0u32..6) {
        let b = (a + len).min(6);
        let up = pr(&t, a, b).unwrap();
        prop_assert!(up.is_semistandard_within(6));
        prop_assert_eq!(up.shape(), t.shape());
        prop_assert_eq!(pr_inv(&up, a, b).unwrap(), t.clone());
        prop_assert_eq!(pr(&pr_inv(&t, a, b).unwrap(), a, b).unwrap(), t);
    }

    #[test]
    fn adjacent_promotion_is_an_involution(t in tableau(1, 6, 8), a in 1u32..6) {
        prop_assert_eq!(pr(&pr(&t, a, a + 1).unwrap(), a, a + 1).unwrap(), t);
    }

    #[test]
    fn separated_promotions_commute(t in tableau(1, 6, 8), [a, b, x, d] in prop::sample::select(separated_pairs(6))) {
        let left = pr(&pr(&t, x, d).unwrap(), a, b).unwrap();
        let right = pr(&pr(&t, a, b).unwrap(), x, d).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn promotions_compose(t in tableau(1, 6, 8), cuts in prop::array::uniform3(1u32..=6)) {
        let mut c = cuts;
        c.sort_unstable();
        let [a, b, x] = c;
        prop_assert_eq!(pr(&pr(&t, b, x).unwrap(), a, b).unwrap(), pr(&t, a, x).unwrap());
    }

    #[test]
    fn composites_invert(t in tableau(1, 6, 7)) {
        let r = rank(3);
        prop_assert_eq!(inverse(Bijection::Phi, &phi(&t, r).unwrap(), r).unwrap(), t.clone());
        prop_assert_eq!(inverse(Bijection::Psi, &psi(&t, r).unwrap(), r).unwrap(), t);
    }

    #[test]
    fn rectification_of_skew_supports(t in tableau(1, 6, 8), [a, b, c, d] in interval(6), picks in prop::collection::vec(0usize..8, 8)) {
        let inner = t.iter().any(|(_, v)| (a..=b).contains(&v));
        let below = t.iter().any(|(_, v)| v < a);
        let band = t.iter().any(|(_, v)| b < v && v < c);
        prop_assume!(!band || (!inner && !below));
        let skew = restrict(&t, a, b, c, d).unwrap();
        let canonical = rect_with(&skew, |_| 0).unwrap();
        let mut k = 0;
        let arbitrary = rect_with(&skew, |cs| { k += 1; picks[k % picks.len()] % cs.len() }).unwrap();
        prop_assert_eq!(&canonical, &arbitrary);
        let mut cells: Vec<_> = skew.entries.iter().collect();
        cells.sort_by_key(|&(c, _)| (std::cmp::Reverse(c.y), c.x));
        let word = Word(cells.into_iter().map(|(_, v)| v).collect());
        prop_assert_eq!(insertion_tableau(&word), canonical);
    }

    #[test]
    fn res_agrees_with_promotion_formula(lo in 1u32..=6, seed in tableau(1, 6, 8), [a, b, c, d] in interval(6)) {
        // Entries of the tableau are at least `a`.
        let t = insertion_tableau(&Word(seed.iter().map(|(_, v)| v.max(lo)).collect()));
        let a = a.min(t.min_entry().unwrap_or(a));
        let (b, c, d) = (b.max(a), c.max(a), d.max(a));
        prop_assert_eq!(res_via_promotion(&t, a, b, c, d).unwrap(), res(&t, a, b, c, d).unwrap());
    }

    #[test]
    fn local_promotion_identity(k in 1u32..=2, t0 in tableau(1, 6, 8)) {
        let r = rank(3);
        let t = insertion_tableau(&Word(t0.iter().map(|(_, v)| v.max(k)).collect()));
        let bar = |i: u32| r.bar(i);
        let lhs = pr(&pr(&t, k + 2, bar(k + 1)).unwrap(), k + 3, bar(k)).unwrap()
            .filter_entries(|v| (k..=k + 3).contains(&v));
        let rhs = res(&t, k, k + 1, bar(k + 1), bar(k)).unwrap()
            .map_entries(|v| if v == bar(k + 1) { k + 2 } else if v == bar(k) { k + 3 } else { v });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn promotion_shifts_restriction(t in tableau(1, 6, 8)) {
        let lhs = res(&pr_inv(&t, 2, 6).unwrap(), 2, 5, 5, 5).unwrap();
        let rhs = res(&t, 3, 6, 6, 6).unwrap().map_entries(|v| v - 1);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn crystal_operators_are_seminormal(t in tableau(1, 6, 8), i in 1usize..6) {
        let wt = wt_gl(&t, rank(3));
        prop_assert_eq!(t.phi(i) as i32 - t.eps(i) as i32, wt[i - 1] - wt[i]);
        if let Some(u) = t.f(i) {
            prop_assert!(u.is_semistandard_within(6));
            prop_assert_eq!(u.e(i), Some(t.clone()));
            let moved = wt_gl(&u, rank(3));
            prop_assert_eq!(moved[i - 1], wt[i - 1] - 1);
            prop_assert_eq!(moved[i], wt[i] + 1);
        } else {
            prop_assert_eq!(t.phi(i), 0);
        }
        if let Some(u) = t.e(i) {
            prop_assert_eq!(u.f(i), Some(t));
        }
    }

    #[test]
    fn column_insertion_is_a_crystal_morphism(s in tableau(1, 6, 6), letters in prop::collection::btree_set(1u32..=6, 1..=4), i in 1usize..6) {
        let column: Vec<u32> = letters.into_iter().collect();
        let c = Tableau::column(&column);
        let product = column_star(&c, &s).unwrap();
        prop_assert!(is_vertical_strip(&product.shape().unwrap(), &s.shape().unwrap()));
        let pair = Tensor(c, s);
        let through = pair.f(i).map(|Tensor(c, s)| column_star(&c, &s).unwrap());
        prop_assert_eq!(product.f(i), through);
        let through = pair.e(i).map(|Tensor(c, s)| column_star(&c, &s).unwrap());
        prop_assert_eq!(product.e(i), through);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn characters_are_weyl_symmetric(lambda in partition(3, 4), mu in partition(3, 2), elements in prop::collection::vec(weyl_element(2), 5)) {
        let r = rank(2);
        let gl = restricted_gl_character(&lambda, r);
        let sp = sp_character(&mu, r);
        for (perm, signs) in &elements {
            prop_assert_eq!(&gl.act(perm, signs), &gl);
            prop_assert_eq!(&sp.act(perm, signs), &sp);
        }
    }

    #[test]
    fn branching_rule_reassembles_the_dimension(lambda in partition(3, 6)) {
        for n in [2usize, 3] {
            prop_assume!(lambda.length() <= 2 * n);
            let r = rank(n);
            let rule = branching_rule(&lambda, r).unwrap();
            prop_assert_eq!(reassembled_dimension(&rule, r), ssyt_count(&lambda, r.m()));
        }
    }
}

#[test]
fn weyl_action_moves_non_symmetric_characters() {
    let mut lone = Character::new();
    lone.add(symplectic_branching::SpWeight(vec![1, 0]), 1);
    assert_ne!(lone.act(&[0, 1], &[-1, 1]), lone);
}
