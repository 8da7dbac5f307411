//! Subword complexes SC(Q, w): facets, flips and the flip poset, plus the
//! parabolic cluster complex with Q = c · w_o(c) and w = w_o^J.

use std::collections::HashMap;

use crate::coxeter::{is_positive_root, CoxeterSystem, GroupElement, WeakInterval};
use crate::error::{Error, Result};
use crate::partition::FerrersShape;
use crate::perm::Permutation;
use crate::poset::FinitePoset;
use crate::ring::Ring;

/// Sorted 0-based positions of Q left out of the reduced occurrence.
pub type Facet = Vec<usize>;

#[derive(Clone, Debug)]
pub struct SubwordComplex<R: Ring> {
    sys: CoxeterSystem<R>,
    q: Vec<usize>,
    target: GroupElement<R>,
    interval: WeakInterval<R>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Flip {
    pub leaving: usize,
    pub entering: usize,
    pub facet: Facet,
}

impl Flip {
    /// A flip in the oriented sense: the leaving position precedes the entering one.
    pub fn is_increasing(&self) -> bool {
        self.leaving < self.entering
    }
}

impl<R: Ring> SubwordComplex<R> {
    pub fn new(sys: &CoxeterSystem<R>, q: &[usize], target: &GroupElement<R>) -> Result<Self> {
        if q.iter().any(|&s| s >= sys.rank()) {
            return Err(Error::OutOfRange("letter of Q".into()));
        }
        if target.length() > q.len() {
            return Err(Error::Unsupported("target longer than Q".into()));
        }
        if target.length() > 128 {
            return Err(Error::Bound("targets longer than 128".into()));
        }
        Ok(SubwordComplex {
            sys: sys.clone(),
            q: q.to_vec(),
            target: target.clone(),
            interval: sys.weak_interval(target),
        })
    }

    pub fn q(&self) -> &[usize] {
        &self.q
    }

    pub fn target(&self) -> &GroupElement<R> {
        &self.target
    }

    pub fn facet_size(&self) -> usize {
        self.q.len() - self.target.length()
    }

    /// Inversion mask after appending letter `s` to the element with mask `mask`,
    /// if that keeps the prefix reduced and below the target.
    fn step(&self, mask: u128, s: usize) -> Option<u128> {
        let x = &self.interval.elements[self.interval.position[&mask]];
        let root = self.sys.column(x, s);
        if !is_positive_root(&root) {
            return None;
        }
        self.interval.index.get(&root).map(|&bit| mask | 1u128 << bit)
    }

    fn full_mask(&self) -> u128 {
        let k = self.target.length();
        if k == 128 {
            u128::MAX
        } else {
            (1u128 << k) - 1
        }
    }

    fn count_from(&self, pos: usize, mask: u128, memo: &mut HashMap<(usize, u128), u128>) -> u128 {
        if pos == self.q.len() {
            return u128::from(mask == self.full_mask());
        }
        let used = mask.count_ones() as usize;
        if self.target.length() - used > self.q.len() - pos {
            return 0;
        }
        if let Some(&v) = memo.get(&(pos, mask)) {
            return v;
        }
        let mut total = self.count_from(pos + 1, mask, memo);
        if let Some(next) = self.step(mask, self.q[pos]) {
            total += self.count_from(pos + 1, next, memo);
        }
        memo.insert((pos, mask), total);
        total
    }

    pub fn count_facets(&self) -> u128 {
        self.count_from(0, 0, &mut HashMap::new())
    }

    /// All facets, ordered lexicographically by their sorted complements.
    pub fn facets(&self) -> Vec<Facet> {
        let mut memo = HashMap::new();
        let mut out = Vec::new();
        let mut skipped = Vec::new();
        self.collect(0, 0, &mut skipped, &mut memo, &mut out);
        out.sort();
        out
    }

    fn collect(
        &self,
        pos: usize,
        mask: u128,
        skipped: &mut Vec<usize>,
        memo: &mut HashMap<(usize, u128), u128>,
        out: &mut Vec<Facet>,
    ) {
        if self.count_from(pos, mask, memo) == 0 {
            return;
        }
        if pos == self.q.len() {
            out.push(skipped.clone());
            return;
        }
        skipped.push(pos);
        self.collect(pos + 1, mask, skipped, memo, out);
        skipped.pop();
        if let Some(next) = self.step(mask, self.q[pos]) {
            self.collect(pos + 1, next, skipped, memo, out);
        }
    }

    /// The complementary word of a facet.
    pub fn witness(&self, facet: &[usize]) -> Vec<usize> {
        (0..self.q.len()).filter(|p| !facet.contains(p)).map(|p| self.q[p]).collect()
    }

    pub fn is_facet(&self, facet: &[usize]) -> bool {
        let mut sorted = facet.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != facet.len() || sorted.len() != self.facet_size() || sorted.iter().any(|&p| p >= self.q.len())
        {
            return false;
        }
        let word = self.witness(&sorted);
        self.sys.is_reduced(&word) && self.sys.element(&word) == self.target
    }

    /// Facets adjacent to `facet` by exchanging one position.
    pub fn flips(&self, facet: &[usize]) -> Result<Vec<Flip>> {
        if !self.is_facet(facet) {
            return Err(Error::NotFacet);
        }
        let mut sorted = facet.to_vec();
        sorted.sort_unstable();
        let mut out = Vec::new();
        for (k, &leaving) in sorted.iter().enumerate() {
            for entering in (0..self.q.len()).filter(|p| !sorted.contains(p)) {
                let mut other = sorted.clone();
                other[k] = entering;
                other.sort_unstable();
                if self.is_facet(&other) {
                    out.push(Flip { leaving, entering, facet: other });
                }
            }
        }
        Ok(out)
    }

    /// Directed flip graph on `facets()`: an edge F → F' for each increasing flip.
    pub fn flip_edges(&self, facets: &[Facet]) -> Vec<(usize, usize)> {
        let mut ridges: HashMap<Vec<usize>, Vec<(usize, usize)>> = HashMap::new();
        for (f, facet) in facets.iter().enumerate() {
            for (k, &p) in facet.iter().enumerate() {
                let mut ridge = facet.clone();
                ridge.remove(k);
                ridges.entry(ridge).or_default().push((f, p));
            }
        }
        let mut edges = Vec::new();
        for group in ridges.values() {
            for &(f, i) in group {
                for &(g, j) in group {
                    if i < j {
                        edges.push((f, g));
                    }
                }
            }
        }
        edges.sort_unstable();
        edges
    }

    /// Reflexive-transitive closure of the increasing flips.
    pub fn flip_poset(&self) -> Result<(FinitePoset, Vec<Facet>)> {
        let facets = self.facets();
        let edges = self.flip_edges(&facets);
        let labels =
            facets.iter().map(|f| f.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(",")).collect();
        let order = FinitePoset::from_covers(labels, &edges)?;
        Ok((order, facets))
    }
}

/// SC(c · w_o(c), w_o^J).
pub fn cluster_complex<R: Ring>(sys: &CoxeterSystem<R>, j: &[usize], c: &[usize]) -> Result<SubwordComplex<R>> {
    let w0 = sys.longest_element()?;
    let mut q = c.to_vec();
    q.extend(sys.c_sorting_word(&w0, c)?);
    SubwordComplex::new(sys, &q, &sys.quotient_min_rep(&w0, j))
}

/// The permutation of the word ∏_i ∏_{j = n+1−i−λi}^{n−i} s_j in S_n. Rows are
/// anchored at n, so the product agrees with the λ1-anchored form whenever
/// λ1 = n − 1 and still yields w_o^J when s_{n−1} ∈ J.
pub fn w_from_shape(shape: &FerrersShape, n: usize) -> Result<Permutation> {
    let mut word = Vec::new();
    for (i, &len) in shape.rows().iter().enumerate() {
        let i = i + 1;
        let top = n as isize - i as isize;
        let bottom = top + 1 - len as isize;
        if bottom < 1 {
            return Err(Error::OutOfRange(format!("row {i} of the shape does not fit n = {n}")));
        }
        word.extend((bottom..=top).map(|j| j as usize));
    }
    Permutation::from_word(n, &word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::{build_system, AnySystem};
    use crate::partition::bounding_shape;
    use crate::perm::{j_regions, quotient_longest};
    use crate::poset::chain;

    fn int(kind: &str, rank: usize) -> CoxeterSystem<i64> {
        match build_system(kind, rank, None).unwrap() {
            AnySystem::Int(s) => s,
            _ => panic!(),
        }
    }

    #[test]
    fn small_facets() {
        let a1 = int("A", 1);
        let sc = SubwordComplex::new(&a1, &[0, 0, 0], &a1.generator(0)).unwrap();
        assert_eq!(sc.facets(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let a2 = int("A", 2);
        let w0 = a2.longest_element().unwrap();
        let sc = SubwordComplex::new(&a2, &[0, 1, 0, 1, 0], &w0).unwrap();
        assert_eq!(sc.count_facets(), 5);
        assert_eq!(sc.facets().len(), 5);
        let one = SubwordComplex::new(&a2, &[0, 1, 0], &w0).unwrap();
        assert_eq!(one.facets(), vec![Vec::<usize>::new()]);
        assert!(one.flips(&[]).unwrap().is_empty());
    }

    #[test]
    fn flips_in_a1() {
        let a1 = int("A", 1);
        let sc = SubwordComplex::new(&a1, &[0, 0, 0], &a1.generator(0)).unwrap();
        let flips = sc.flips(&[1, 2]).unwrap();
        assert_eq!(flips.len(), 2);
        assert!(flips.iter().all(|f| !f.is_increasing()));
        assert_eq!(sc.flips(&[0]), Err(Error::NotFacet));
        let (poset, _) = sc.flip_poset().unwrap();
        assert!(poset.is_isomorphic(&chain(3)));
    }

    #[test]
    fn cluster_complexes() {
        let a2 = int("A", 2);
        let sc = cluster_complex(&a2, &[], &[0, 1]).unwrap();
        let facets = sc.facets();
        assert_eq!(facets.len(), 5);
        for f in &facets {
            assert_eq!(sc.flips(f).unwrap().len(), 2);
        }
        let (poset, _) = sc.flip_poset().unwrap();
        assert!(poset.is_lattice().is_lattice());
        assert_eq!(poset.covers().len(), 5);
        let a3 = int("A", 3);
        assert_eq!(cluster_complex(&a3, &[1], &[0, 1, 2]).unwrap().count_facets(), 10);
        let AnySystem::Golden(h3) = build_system("H", 3, None).unwrap() else { panic!() };
        assert_eq!(cluster_complex(&h3, &[2], &[0, 1, 2]).unwrap().count_facets(), 25);
    }

    #[test]
    fn flip_poset_matches_tamari() {
        let a3 = int("A", 3);
        let (poset, _) = cluster_complex(&a3, &[1], &[0, 1, 2]).unwrap().flip_poset().unwrap();
        let tam = crate::tamari::tamari_lattice(&j_regions(4, &[2]).unwrap());
        assert!(poset.is_isomorphic(&tam.poset));
    }

    #[test]
    fn shapes() {
        assert_eq!(w_from_shape(&FerrersShape::new(vec![]).unwrap(), 4).unwrap(), Permutation::identity(4));
        let ctx = j_regions(4, &[2]).unwrap();
        let shape = bounding_shape(&ctx);
        assert_eq!(shape.rows(), &[3, 1, 1]);
        assert_eq!(w_from_shape(&shape, 4).unwrap(), quotient_longest(&ctx));
        let stair = FerrersShape::new(vec![3, 2, 1]).unwrap();
        assert_eq!(w_from_shape(&stair, 4).unwrap(), Permutation::longest(4));
        assert!(w_from_shape(&stair, 3).is_err());
        let ctx = j_regions(3, &[2]).unwrap();
        assert_eq!(bounding_shape(&ctx).rows(), &[1, 1]);
        assert_eq!(w_from_shape(&bounding_shape(&ctx), 3).unwrap(), quotient_longest(&ctx));
    }
}
