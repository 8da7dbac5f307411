//! Randomized invariants of the Coxeter engine, the type A projections and the
//! partition bijections.

use proptest::prelude::*;

use paracat::coxeter::{build_system, AnySystem, CoxeterSystem};
use paracat::partition::{nc_to_nn, nc_to_perm, nn_to_nc, perm_to_nc};
use paracat::perm::{inversion_set, j_regions, weak_leq, weak_meet, JContext, Permutation};
use paracat::ring::Ring;
use paracat::tamari::{avoiding_elements, is_j231_avoiding, pi_down, pi_up};
use paracat::with_system;

fn system(index: usize) -> AnySystem {
    let (kind, rank) = [("A", 4), ("B", 3), ("D", 4), ("H", 3), ("F", 4), ("affine-A", 3)][index];
    build_system(kind, rank, None).unwrap()
}

fn root_key<R: Ring>(r: &[R]) -> Vec<String> {
    r.iter().map(|x| x.to_string()).collect()
}

fn check_word<R: Ring>(sys: &CoxeterSystem<R>, word: &[usize]) -> Result<(), TestCaseError> {
    let w = sys.element(word);
    prop_assert!(sys.is_reduced(w.word()));
    prop_assert!(w.length() <= word.len());
    prop_assert_eq!((word.len() - w.length()) % 2, 0);
    let mut seq: Vec<_> = sys.inversion_sequence(w.word()).unwrap().iter().map(|r| root_key(r)).collect();
    let mut left: Vec<_> = sys.left_inversion_set(&w).iter().map(|r| root_key(r)).collect();
    seq.sort();
    left.sort();
    prop_assert_eq!(seq, left);
    let inv = sys.inverse(&w);
    prop_assert!(sys.multiply(&w, &inv).is_identity());
    prop_assert_eq!(inv.length(), w.length());
    for s in sys.right_descents(&w) {
        prop_assert_eq!(sys.mul_simple(&w, s).length() + 1, w.length());
    }
    prop_assert_eq!(sys.cover_reflections(&w).len(), sys.right_descents(&w).len());
    Ok(())
}

fn quotient_ctx() -> impl Strategy<Value = JContext> {
    (2usize..=7).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n - 1).prop_map(move |bits| {
            let j: Vec<usize> = bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i + 1).collect();
            j_regions(n, &j).unwrap()
        })
    })
}

fn quotient_member(ctx: &JContext, seed: u64) -> Permutation {
    let n = ctx.n();
    let mut values: Vec<usize> = (1..=n).collect();
    let mut state = seed;
    for i in (1..n).rev() {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        values.swap(i, (state >> 33) as usize % (i + 1));
    }
    for region in ctx.regions() {
        let mut vals: Vec<usize> = region.iter().map(|&p| values[p - 1]).collect();
        vals.sort_unstable();
        for (&p, v) in region.iter().zip(vals) {
            values[p - 1] = v;
        }
    }
    Permutation::new(values).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn coxeter_words(index in 0usize..6, word in proptest::collection::vec(0usize..4, 0..24)) {
        let sys = system(index);
        let rank = sys.rank();
        let word: Vec<usize> = word.into_iter().map(|s| s % rank).collect();
        with_system!(&sys, s => check_word(s, &word))?;
    }

    #[test]
    fn projections_bracket_and_land_in_avoiding(ctx in quotient_ctx(), seed in any::<u64>()) {
        let w = quotient_member(&ctx, seed);
        let down = pi_down(&w, &ctx).unwrap();
        let up = pi_up(&w, &ctx).unwrap();
        prop_assert!(weak_leq(&down, &w).unwrap());
        prop_assert!(weak_leq(&w, &up).unwrap());
        prop_assert!(is_j231_avoiding(&down, &ctx));
        prop_assert_eq!(pi_down(&up, &ctx).unwrap(), down.clone());
        prop_assert_eq!(pi_down(&down, &ctx).unwrap(), down);
    }

    #[test]
    fn weak_meet_is_intersection_bound(n in 2usize..=7, a in any::<u64>(), b in any::<u64>()) {
        let ctx = j_regions(n, &[]).unwrap();
        let u = quotient_member(&ctx, a);
        let v = quotient_member(&ctx, b);
        let m = weak_meet(&u, &v).unwrap();
        prop_assert!(inversion_set(&m).is_subset(&inversion_set(&u)));
        prop_assert!(inversion_set(&m).is_subset(&inversion_set(&v)));
    }

    #[test]
    fn bijections_round_trip(ctx in quotient_ctx(), pick in any::<usize>()) {
        let avoiding = avoiding_elements(&ctx);
        let w = &avoiding[pick % avoiding.len()];
        let nc = perm_to_nc(w, &ctx).unwrap();
        prop_assert_eq!(&nc_to_perm(&nc, &ctx).unwrap(), w);
        let nn = nc_to_nn(&nc, &ctx).unwrap();
        prop_assert_eq!(nn_to_nc(&nn, &ctx).unwrap(), nc);
    }
}
