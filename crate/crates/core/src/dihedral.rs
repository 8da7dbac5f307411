//! Closed-form dihedral groups I2(m) for any m ≥ 2.
//!
//! Elements are ρ^r σ^f with s1 = σ and s2 = ρσ. Positive roots are indexed
//! by angle 0..m−1 from α1 to α2; the reflection of root k is ρ^{−k}σ. Under
//! the positive-solution rule a root decomposes over two others exactly when
//! it lies strictly between them in angle.

use std::collections::HashSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::tables::FamilyCounts;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralElement {
    pub rotation: usize,
    pub flip: bool,
}

/// The alternating word of `len` letters starting with generator `start` (0 or 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlternatingWord {
    pub start: usize,
    pub len: usize,
}

impl AlternatingWord {
    pub fn letters(&self) -> Vec<usize> {
        (0..self.len).map(|i| (self.start + i) % 2).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Dihedral {
    m: usize,
}

impl Dihedral {
    pub fn new(m: usize) -> Result<Self> {
        if !(2..=127).contains(&m) {
            return Err(Error::Unsupported(format!("dihedral order m = {m}")));
        }
        Ok(Dihedral { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn identity(&self) -> DihedralElement {
        DihedralElement { rotation: 0, flip: false }
    }

    pub fn generator(&self, s: usize) -> DihedralElement {
        DihedralElement { rotation: s % self.m, flip: true }
    }

    pub fn multiply(&self, x: DihedralElement, y: DihedralElement) -> DihedralElement {
        let b = if x.flip { self.m - y.rotation % self.m } else { y.rotation };
        DihedralElement { rotation: (x.rotation + b) % self.m, flip: x.flip ^ y.flip }
    }

    pub fn element(&self, word: &[usize]) -> DihedralElement {
        word.iter().fold(self.identity(), |acc, &s| self.multiply(acc, self.generator(s)))
    }

    pub fn reflection(&self, root: usize) -> DihedralElement {
        DihedralElement { rotation: (self.m - root) % self.m, flip: true }
    }

    pub fn length(&self, x: DihedralElement) -> usize {
        let m = self.m;
        if x.flip {
            let k = (m - x.rotation) % m;
            (2 * k + 1).min(2 * (m - 1 - k) + 1)
        } else {
            let r = x.rotation;
            2 * r.min(m - r)
        }
    }

    /// Angular indices of the left inversions of an alternating word.
    pub fn inversions(&self, w: AlternatingWord) -> Vec<usize> {
        if w.start == 0 {
            (0..w.len).collect()
        } else {
            (0..w.len).map(|i| self.m - 1 - i).collect()
        }
    }

    fn mask(&self, w: AlternatingWord) -> u128 {
        self.inversions(w).iter().fold(0, |acc, &k| acc | 1u128 << k)
    }

    fn covers(&self, w: AlternatingWord) -> Vec<usize> {
        match w.len {
            0 => vec![],
            l if l == self.m => vec![0, self.m - 1],
            l if w.start == 0 => vec![l - 1],
            l => vec![self.m - l],
        }
    }

    /// Reduced word of w_o^J (J ⊆ {0, 1}) as an alternating word; c picks the
    /// first letter when J is empty.
    pub fn base_word(&self, j: &[usize], c: &[usize]) -> AlternatingWord {
        let m = self.m;
        match (j.contains(&0), j.contains(&1)) {
            (false, false) => AlternatingWord { start: c[0], len: m },
            (true, true) => AlternatingWord { start: 0, len: 0 },
            (in0, _) => {
                // longest element without a right descent in J: its last letter is the other generator
                let last = if in0 { 1 } else { 0 };
                let len = m - 1;
                let start = if len % 2 == 1 { last } else { 1 - last };
                AlternatingWord { start, len }
            }
        }
    }

    /// Elements of [e, base] as alternating words (w_o once).
    fn interval(&self, base: AlternatingWord) -> Vec<AlternatingWord> {
        if base.len == self.m {
            let mut out = vec![AlternatingWord { start: 0, len: 0 }];
            out.extend((1..=self.m).map(|len| AlternatingWord { start: 0, len }));
            out.extend((1..self.m).map(|len| AlternatingWord { start: 1, len }));
            out
        } else {
            (0..=base.len).map(|len| AlternatingWord { start: base.start, len }).collect()
        }
    }

    fn check(&self, j: &[usize], c: &[usize]) -> Result<()> {
        if j.iter().any(|&s| s > 1) {
            return Err(Error::InvalidJ(format!("{j:?}")));
        }
        let mut sorted = c.to_vec();
        sorted.sort_unstable();
        if sorted != [0, 1] {
            return Err(Error::Unsupported("c must use both generators once".into()));
        }
        Ok(())
    }

    /// Aligned elements under the positive-solution rule.
    pub fn aligned(&self, j: &[usize], c: &[usize]) -> Result<Vec<AlternatingWord>> {
        self.check(j, c)?;
        let base = self.base_word(j, c);
        let order = self.inversions(base);
        let pos = |k: usize| order.iter().position(|&r| r == k).expect("inversion of base");
        let k = order.len();
        Ok(self
            .interval(base)
            .into_iter()
            .filter(|&x| {
                let mask = self.mask(x);
                self.covers(x).into_iter().all(|g| {
                    let p = pos(g);
                    p == 0 || p + 1 == k || order[..p].iter().all(|&a| mask >> a & 1 == 1)
                })
            })
            .collect())
    }

    pub fn counts(&self, j: &[usize], c: &[usize]) -> Result<FamilyCounts> {
        let aligned = self.aligned(j, c)?;
        let base = self.base_word(j, c);
        let order = self.inversions(base);
        let nc: HashSet<DihedralElement> = aligned
            .iter()
            .map(|&x| {
                let mut covers = self.covers(x);
                covers.sort_by_key(|&g| order.iter().position(|&r| r == g));
                covers.into_iter().fold(self.identity(), |acc, g| self.multiply(acc, self.reflection(g)))
            })
            .collect();
        let mut q = c.to_vec();
        q.extend(AlternatingWord { start: c[0], len: self.m }.letters());
        let target = self.element(&base.letters());
        let sw = (0..q.len())
            .combinations(base.len)
            .filter(|kept| {
                let word: Vec<usize> = kept.iter().map(|&p| q[p]).collect();
                let x = self.element(&word);
                x == target && self.length(x) == base.len
            })
            .count();
        Ok(FamilyCounts { align: aligned.len() as u64, nc: nc.len() as u64, sw: sw as u64 })
    }

    /// Ideals of the parabolic filter of the chain-shaped root poset.
    pub fn nonnesting_count(&self, j: &[usize]) -> u64 {
        match j.iter().filter(|&&s| s < 2).unique().count() {
            0 => self.m as u64 + 2,
            1 => self.m as u64,
            _ => 1,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::align::Acceptance;
    use crate::coxeter::build_system;
    use crate::tables::{any_family_counts, any_nonnesting_count};

    #[test]
    fn group_structure() {
        let d = Dihedral::new(5).unwrap();
        let s1 = d.generator(0);
        let s2 = d.generator(1);
        assert_eq!(d.multiply(s1, s1), d.identity());
        let w0a = d.element(&[0, 1, 0, 1, 0]);
        let w0b = d.element(&[1, 0, 1, 0, 1]);
        assert_eq!(w0a, w0b);
        assert_eq!(d.length(w0a), 5);
        assert_eq!(d.reflection(4), s2);
        assert_eq!(d.reflection(0), s1);
        assert_eq!(d.length(d.element(&[0, 1])), 2);
    }

    #[test]
    fn catalan_counts() {
        for m in 2..=12 {
            let d = Dihedral::new(m).unwrap();
            let counts = d.counts(&[], &[0, 1]).unwrap();
            assert_eq!(counts, FamilyCounts { align: m as u64 + 2, nc: m as u64 + 2, sw: m as u64 + 2 });
            assert_eq!(d.counts(&[0], &[1, 0]).unwrap().align, m as u64);
            assert_eq!(d.counts(&[0, 1], &[1, 0]).unwrap().sw, 1);
        }
    }

    #[test]
    fn agrees_with_generic_engine() {
        for m in 3..=6u32 {
            let d = Dihedral::new(m as usize).unwrap();
            let sys = build_system("I", 2, Some(m)).unwrap();
            for j in [vec![], vec![0], vec![1], vec![0, 1]] {
                for c in [[0, 1], [1, 0]] {
                    assert_eq!(
                        d.counts(&j, &c).unwrap(),
                        any_family_counts(&sys, &j, &c, Acceptance::Positive).unwrap(),
                        "m={m} J={j:?} c={c:?}"
                    );
                }
                assert_eq!(d.nonnesting_count(&j), any_nonnesting_count(&sys, &j, None).unwrap());
            }
        }
    }
}
