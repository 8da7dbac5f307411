//! Aligned elements relative to a fixed reduced word, the ψ map to
//! noncrossing elements, and the parabolic specializations.

use std::collections::HashSet;
use std::str::FromStr;

use rayon::prelude::*;

use crate::coxeter::{is_negative_root, CoxeterSystem, GroupElement, Root, WeakInterval};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::ring::{Frac, Ring};

/// Which solutions (a, b) of γ = aα + bβ count as decompositions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Acceptance {
    /// Any strictly positive solution in the coefficient field.
    #[default]
    Positive,
    /// Only strictly positive rational integers.
    Integers,
}

impl FromStr for Acceptance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive" => Ok(Acceptance::Positive),
            "integers" => Ok(Acceptance::Integers),
            _ => Err(Error::Parse(format!("decomposition rule {s:?}"))),
        }
    }
}

/// γ = aα + bβ with α before γ before β in the inversion order (indices into it).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition<R: Ring> {
    pub alpha: usize,
    pub gamma: usize,
    pub beta: usize,
    pub a: Frac<R>,
    pub b: Frac<R>,
}

#[derive(Clone, Debug)]
pub struct AlignmentContext<R: Ring> {
    sys: CoxeterSystem<R>,
    base_word: Vec<usize>,
    decompositions: Vec<Decomposition<R>>,
    /// For each inversion γ, the α's its decompositions require.
    need: Vec<u128>,
    interval: WeakInterval<R>,
}

#[derive(Clone, Debug)]
pub struct NoncrossingElement<R: Ring> {
    pub element: GroupElement<R>,
    pub source: GroupElement<R>,
    /// Indices into the inversion order.
    pub ordered_covers: Vec<usize>,
}

impl<R: Ring> AlignmentContext<R> {
    pub fn new(sys: &CoxeterSystem<R>, base_word: &[usize], rule: Acceptance) -> Result<Self> {
        let inv = sys.inversion_sequence(base_word)?;
        if inv.len() > 128 {
            return Err(Error::Bound("base words longer than 128 letters".into()));
        }
        let base = sys.element(base_word);
        let interval = sys.weak_interval(&base);
        debug_assert_eq!(interval.roots, inv);
        let k = inv.len();
        let mut decompositions = Vec::new();
        for g in 0..k {
            for a in 0..g {
                for b in g + 1..k {
                    let Some((x, y)) = sys.solve_two_root_combination(&inv[g], &inv[a], &inv[b])? else {
                        continue;
                    };
                    let accepted = match rule {
                        Acceptance::Positive => true,
                        Acceptance::Integers => x.as_positive_int().is_some() && y.as_positive_int().is_some(),
                    };
                    if accepted {
                        decompositions.push(Decomposition { alpha: a, gamma: g, beta: b, a: x, b: y });
                    }
                }
            }
        }
        let mut need = vec![0u128; k];
        for d in &decompositions {
            need[d.gamma] |= 1u128 << d.alpha;
        }
        Ok(AlignmentContext { sys: sys.clone(), base_word: base_word.to_vec(), decompositions, need, interval })
    }

    pub fn system(&self) -> &CoxeterSystem<R> {
        &self.sys
    }

    pub fn base_word(&self) -> &[usize] {
        &self.base_word
    }

    pub fn inv_order(&self) -> &[Root<R>] {
        &self.interval.roots
    }

    pub fn decompositions(&self) -> &[Decomposition<R>] {
        &self.decompositions
    }

    pub fn interval(&self) -> &WeakInterval<R> {
        &self.interval
    }

    /// Indices (into the inversion order) of the cover reflections of x.
    pub fn cover_indices(&self, x: &GroupElement<R>) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for s in 0..self.sys.rank() {
            let col = self.sys.column(x, s);
            if is_negative_root(&col) {
                let root: Root<R> = col.iter().map(|&v| -v).collect();
                out.push(*self.interval.index.get(&root).ok_or(Error::NotBelow)?);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn inversion_mask(&self, x: &GroupElement<R>) -> Result<u128> {
        self.interval.mask_of(&self.sys, x).ok_or(Error::NotBelow)
    }

    fn aligned_by_mask(&self, mask: u128, covers: &[usize]) -> bool {
        covers.iter().all(|&g| self.need[g] & !mask == 0)
    }

    pub fn is_aligned(&self, x: &GroupElement<R>) -> Result<bool> {
        let mask = self.inversion_mask(x)?;
        Ok(self.aligned_by_mask(mask, &self.cover_indices(x)?))
    }

    /// Indices into `interval().elements` of the aligned elements.
    pub fn aligned_indices(&self) -> Vec<usize> {
        (0..self.interval.len())
            .into_par_iter()
            .filter(|&i| {
                let x = &self.interval.elements[i];
                let covers = self.cover_indices(x).expect("interval element");
                self.aligned_by_mask(self.interval.masks[i], &covers)
            })
            .collect()
    }

    pub fn aligned_elements(&self) -> Vec<GroupElement<R>> {
        self.aligned_indices().into_iter().map(|i| self.interval.elements[i].clone()).collect()
    }

    fn psi_matrix(&self, x: &GroupElement<R>, covers: &[usize]) -> Vec<R> {
        let mut product = self.sys.identity().matrix().to_vec();
        for &g in covers {
            let s = (0..self.sys.rank())
                .find(|&s| {
                    let col = self.sys.column(x, s);
                    is_negative_root(&col) && col.iter().zip(&self.interval.roots[g]).all(|(a, b)| *a == -*b)
                })
                .expect("cover comes from a descent");
            product = self.sys.matrix_product(&product, &self.sys.conjugate_matrix(x, s));
        }
        product
    }

    /// Ordered product of the cover reflections of an aligned element.
    pub fn psi(&self, x: &GroupElement<R>) -> Result<NoncrossingElement<R>> {
        if !self.is_aligned(x)? {
            return Err(Error::NotAligned);
        }
        let covers = self.cover_indices(x)?;
        let element = self.sys.element_from_matrix(self.psi_matrix(x, &covers));
        Ok(NoncrossingElement { element, source: x.clone(), ordered_covers: covers })
    }

    /// Distinct ψ values over the aligned elements, ordered by length then word.
    pub fn noncrossing_elements(&self) -> Vec<GroupElement<R>> {
        let mats: Vec<Vec<R>> = self
            .aligned_indices()
            .into_par_iter()
            .map(|i| {
                let x = &self.interval.elements[i];
                self.psi_matrix(x, &self.cover_indices(x).expect("interval element"))
            })
            .collect();
        let mut seen = HashSet::new();
        let mut out: Vec<GroupElement<R>> =
            mats.into_iter().filter(|m| seen.insert(m.clone())).map(|m| self.sys.element_from_matrix(m)).collect();
        out.sort_by(|a, b| (a.length(), a.word()).cmp(&(b.length(), b.word())));
        out
    }

    /// Weak order on the aligned elements, labelled by cached words.
    pub fn aligned_poset(&self) -> (FinitePoset, Vec<GroupElement<R>>) {
        let idx = self.aligned_indices();
        let masks: Vec<u128> = idx.iter().map(|&i| self.interval.masks[i]).collect();
        let elems: Vec<GroupElement<R>> = idx.iter().map(|&i| self.interval.elements[i].clone()).collect();
        let labels = elems.iter().map(|e| self.sys.word_string(e.word())).collect();
        let poset = FinitePoset::from_relation(labels, |a, b| masks[a] & !masks[b] == 0)
            .expect("inversion containment is a partial order");
        (poset, elems)
    }
}

/// Context for the parabolic quotient: base word is the c-sorting word of w_o^J.
pub fn parabolic_context<R: Ring>(
    sys: &CoxeterSystem<R>,
    j: &[usize],
    c: &[usize],
    rule: Acceptance,
) -> Result<AlignmentContext<R>> {
    let top = sys.quotient_longest(j)?;
    let word = sys.c_sorting_word(&top, c)?;
    AlignmentContext::new(sys, &word, rule)
}

pub fn aligned_set_parabolic<R: Ring>(
    sys: &CoxeterSystem<R>,
    j: &[usize],
    c: &[usize],
) -> Result<Vec<GroupElement<R>>> {
    Ok(parabolic_context(sys, j, c, Acceptance::default())?.aligned_elements())
}

pub fn aligned_set_general<R: Ring>(sys: &CoxeterSystem<R>, word: &[usize]) -> Result<Vec<GroupElement<R>>> {
    Ok(AlignmentContext::new(sys, word, Acceptance::default())?.aligned_elements())
}

pub fn noncrossing_set<R: Ring>(sys: &CoxeterSystem<R>, j: &[usize], c: &[usize]) -> Result<Vec<GroupElement<R>>> {
    Ok(parabolic_context(sys, j, c, Acceptance::default())?.noncrossing_elements())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, AnySystem};

    fn int(kind: &str, rank: usize) -> CoxeterSystem<i64> {
        match build_system(kind, rank, None).unwrap() {
            AnySystem::Int(s) => s,
            _ => panic!(),
        }
    }

    #[test]
    fn contexts() {
        let a2 = int("A", 2);
        assert!(AlignmentContext::new(&a2, &[0, 1], Acceptance::Positive).unwrap().decompositions().is_empty());
        let ctx = AlignmentContext::new(&a2, &[0, 1, 0], Acceptance::Positive).unwrap();
        let d = ctx.decompositions();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].alpha, d[0].gamma, d[0].beta), (0, 1, 2));
        assert!(AlignmentContext::new(&a2, &[0, 0], Acceptance::Positive).is_err());
    }

    #[test]
    fn affine_example() {
        let at = int("affine-A", 3);
        let word = at.parse_word("s0 s1 s0 s3 s0 s1 s2").unwrap();
        let ctx = AlignmentContext::new(&at, &word, Acceptance::Positive).unwrap();
        let triples: Vec<(usize, usize, usize)> =
            ctx.decompositions().iter().map(|d| (d.alpha + 1, d.gamma + 1, d.beta + 1)).collect();
        assert_eq!(triples, vec![(1, 2, 3), (2, 4, 6), (3, 4, 5), (1, 5, 6)]);
        assert!(ctx.decompositions().iter().all(|d| d.a.value() == Some(1) && d.b.value() == Some(1)));
        let x = at.element(&at.parse_word("s1 s0 s3 s0").unwrap());
        assert_eq!(ctx.cover_indices(&x).unwrap(), vec![1, 5]);
        assert_eq!(ctx.inversion_mask(&x).unwrap(), 0b101110);
        assert!(!ctx.is_aligned(&x).unwrap());
        assert!(ctx.is_aligned(&at.identity()).unwrap());
        assert!(ctx.is_aligned(&at.element(&word)).unwrap());
        assert_eq!(ctx.aligned_elements().len(), 17);
        let outside = at.element(&at.parse_word("s2").unwrap());
        assert_eq!(ctx.is_aligned(&outside), Err(Error::NotBelow));
    }

    #[test]
    fn general_words() {
        let a4 = int("A", 4);
        let w = a4.parse_word("s2 s1 s2 s3 s4 s2 s1").unwrap();
        assert_eq!(aligned_set_general(&a4, &w).unwrap().len(), 20);
        assert_eq!(aligned_set_general(&a4, &[2]).unwrap().len(), 2);
    }

    #[test]
    fn parabolic_counts() {
        let a4 = int("A", 4);
        assert_eq!(aligned_set_parabolic(&a4, &[], &[0, 1, 2, 3]).unwrap().len(), 42);
        assert_eq!(noncrossing_set(&a4, &[], &[0, 1, 2, 3]).unwrap().len(), 42);
        let d4 = int("D", 4);
        assert_eq!(aligned_set_parabolic(&d4, &[0, 1], &[2, 1, 0, 3]).unwrap().len(), 21);
        assert_eq!(aligned_set_parabolic(&d4, &[0, 1], &[1, 2, 3, 0]).unwrap().len(), 22);
        assert_eq!(noncrossing_set(&a4, &[0, 1, 2, 3], &[0, 1, 2, 3]).unwrap().len(), 1);
    }

    #[test]
    fn psi_of_longest_is_c() {
        let a2 = int("A", 2);
        let ctx = parabolic_context(&a2, &[], &[0, 1], Acceptance::Positive).unwrap();
        let w0 = a2.longest_element().unwrap();
        assert_eq!(ctx.psi(&w0).unwrap().element, a2.element(&[0, 1]));
        assert!(ctx.psi(&a2.identity()).unwrap().element.is_identity());
        let s1 = a2.generator(0);
        assert_eq!(ctx.psi(&s1).unwrap().element, s1);
    }

    #[test]
    fn golden_rule_matters() {
        let AnySystem::Golden(h3) = build_system("H", 3, None).unwrap() else { panic!() };
        let pos = parabolic_context(&h3, &[], &[0, 1, 2], Acceptance::Positive).unwrap();
        let ints = parabolic_context(&h3, &[], &[0, 1, 2], Acceptance::Integers).unwrap();
        assert!(ints.decompositions().len() < pos.decompositions().len());
        assert_eq!(pos.aligned_elements().len(), 32);
    }
}
