//! Type A cross-checks between the matrix model and the permutation model.
//!
//! Matrix words act on roots from the left while `Permutation::from_word`
//! composes position swaps, and the matrix quotient is the prefix interval
//! below the minimal representative of w_o W_J. The two models are identified
//! through x -> w_o x^{-1} w_o, under which the aligned elements for
//! c = s_{n-1} ... s_1 are exactly the (J,231)-avoiding permutations.

use std::collections::BTreeSet;

use paracat::align::{aligned_set_parabolic, noncrossing_set};
use paracat::coxeter::{build_system, AnySystem, CoxeterSystem, GroupElement};
use paracat::partition::{bounding_shape, kreweras_count};
use paracat::perm::{enumerate_quotient, JContext, Permutation};
use paracat::subword::cluster_complex;
use paracat::tamari::avoiding_elements;

fn type_a(rank: usize) -> CoxeterSystem<i64> {
    match build_system("A", rank, None).unwrap() {
        AnySystem::Int(s) => s,
        AnySystem::Golden(_) => unreachable!(),
    }
}

fn to_perm(n: usize, x: &GroupElement<i64>) -> Permutation {
    let word: Vec<usize> = x.word().iter().map(|s| s + 1).collect();
    let p = Permutation::from_word(n, &word).unwrap().inverse();
    Permutation::new((0..n).map(|i| n + 1 - p.values()[n - 1 - i]).collect()).unwrap()
}

fn descending(n: usize) -> Vec<usize> {
    (0..n - 1).rev().collect()
}

#[test]
fn aligned_elements_are_avoiding_permutations() {
    for n in 2..=5 {
        let sys = type_a(n - 1);
        let c = descending(n);
        for ctx in JContext::all_subsets(n) {
            let j: Vec<usize> = ctx.j_set().iter().map(|s| s - 1).collect();
            let aligned: BTreeSet<Permutation> =
                aligned_set_parabolic(&sys, &j, &c).unwrap().iter().map(|x| to_perm(n, x)).collect();
            let avoiding: BTreeSet<Permutation> = avoiding_elements(&ctx).into_iter().collect();
            assert_eq!(aligned, avoiding, "n={n} J={:?}", ctx.j_set());
        }
    }
}

#[test]
fn quotient_enumerations_agree() {
    for n in 2..=5 {
        let sys = type_a(n - 1);
        for ctx in JContext::all_subsets(n) {
            let j: Vec<usize> = ctx.j_set().iter().map(|s| s - 1).collect();
            let generic: BTreeSet<Permutation> =
                sys.enumerate_parabolic_quotient(&j).unwrap().iter().map(|x| to_perm(n, x)).collect();
            let direct: BTreeSet<Permutation> = enumerate_quotient(&ctx).into_iter().collect();
            assert_eq!(generic, direct);
        }
    }
}

#[test]
fn families_match_kreweras_for_every_coxeter_element() {
    for n in 2..=5 {
        let sys = type_a(n - 1);
        for ctx in JContext::all_subsets(n) {
            let j: Vec<usize> = ctx.j_set().iter().map(|s| s - 1).collect();
            let expected = kreweras_count(&bounding_shape(&ctx));
            for c in sys.coxeter_elements() {
                let aligned = aligned_set_parabolic(&sys, &j, &c).unwrap().len() as u128;
                let nc = noncrossing_set(&sys, &j, &c).unwrap().len() as u128;
                let sw = cluster_complex(&sys, &j, &c).unwrap().count_facets();
                assert_eq!((aligned, nc, sw), (expected, expected, expected), "n={n} J={:?} c={c:?}", ctx.j_set());
            }
        }
    }
}
