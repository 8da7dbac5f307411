//! Symmetric group in one-line notation: inversion sets, left weak order,
//! descents and parabolic quotients.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    values: Vec<usize>,
}

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(format!("{values:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { values })
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        Permutation { values }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { values: (1..=n).collect() }
    }

    pub fn longest(n: usize) -> Self {
        Permutation { values: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Value at the 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// Right multiplication by the adjacent transposition s_i, which swaps the
    /// entries at positions i and i+1.
    pub fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut v = self.values.clone();
        v.swap(i - 1, j - 1);
        Permutation { values: v }
    }

    /// Product s_{a_1} s_{a_2} ... s_{a_k} in one-line notation, applying the
    /// letters as position swaps from left to right.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self> {
        let mut v: Vec<usize> = (1..=n).collect();
        for &a in word {
            if a == 0 || a >= n {
                return Err(Error::OutOfRange(format!("s{a} in S_{n}")));
            }
            v.swap(a - 1, a);
        }
        Ok(Permutation { values: v })
    }

    /// One-line notation with region bars, e.g. `4|23|1`.
    pub fn display_with(&self, ctx: &JContext) -> String {
        let wide = self.n() >= 10;
        let mut out = String::new();
        for (r, region) in ctx.regions().iter().enumerate() {
            if r > 0 {
                out.push_str(if wide { " | " } else { "|" });
            }
            let parts: Vec<String> = region.iter().map(|&i| self.at(i).to_string()).collect();
            out.push_str(&parts.join(if wide { " " } else { "" }));
        }
        out
    }

    pub fn length(&self) -> usize {
        inversion_set(self).len()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { " " } else { "" };
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(sep))
    }
}

impl std::str::FromStr for Permutation {
    type Err = Error;

    /// Accepts `3142`, `3 1 4 2`, `3,1,4,2` and barred forms like `4|23|1`.
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s.chars().map(|c| if c == '|' { ' ' } else { c }).collect();
        let toks: Vec<&str> =
            cleaned.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
        let as_numbers: Option<Vec<usize>> = toks.iter().map(|t| t.parse().ok()).collect();
        if let Some(values) = as_numbers.filter(|v| v.len() > 1) {
            if let Ok(p) = Permutation::new(values) {
                return Ok(p);
            }
        }
        let values: Vec<usize> = toks
            .concat()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(s.into())))
            .collect::<Result<_>>()?;
        Permutation::new(values)
    }
}

/// Position pairs (i,j), i<j, stored as a bit set indexed by lexicographic pair rank.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct InversionSet {
    n: usize,
    bits: u128,
}

pub const MAX_N: usize = 16;

pub fn pair_rank(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    // pairs (a, .) for a < i come first
    (i - 1) * n - (i - 1) * i / 2 + (j - i - 1)
}

impl InversionSet {
    pub fn empty(n: usize) -> Self {
        InversionSet { n, bits: 0 }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < j && self.bits >> pair_rank(self.n, i, j) & 1 == 1
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.bits |= 1 << pair_rank(self.n, i, j);
    }

    pub fn remove(&mut self, i: usize, j: usize) {
        self.bits &= !(1 << pair_rank(self.n, i, j));
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                if self.contains(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Rebuilds the permutation, provided this set is a genuine inversion set.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.n;
        let values = (1..=n)
            .map(|i| {
                let before = (1..i).filter(|&j| !self.contains(j, i)).count();
                let after = (i + 1..=n).filter(|&j| self.contains(i, j)).count();
                1 + before + after
            })
            .collect();
        Permutation { values }
    }

    /// Transitive closure as a relation on positions (i<j<k).
    fn closure(mut self) -> Self {
        let n = self.n;
        loop {
            let before = self.bits;
            for i in 1..=n {
                for j in i + 1..=n {
                    if !self.contains(i, j) {
                        continue;
                    }
                    for k in j + 1..=n {
                        if self.contains(j, k) {
                            self.insert(i, k);
                        }
                    }
                }
            }
            if self.bits == before {
                return self;
            }
        }
    }

    fn complement(&self) -> Self {
        let total = self.n * (self.n - 1) / 2;
        let mask = if total == 128 { u128::MAX } else { (1u128 << total) - 1 };
        InversionSet { n: self.n, bits: !self.bits & mask }
    }
}

pub fn inversion_set(w: &Permutation) -> InversionSet {
    let n = w.n();
    assert!(n <= MAX_N, "permutations are limited to n <= {MAX_N}");
    let mut s = InversionSet::empty(n);
    for i in 1..=n {
        for j in i + 1..=n {
            if w.at(i) > w.at(j) {
                s.insert(i, j);
            }
        }
    }
    s
}

pub fn weak_leq(u: &Permutation, v: &Permutation) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    Ok(inversion_set(u).is_subset(&inversion_set(v)))
}

/// Meet in the weak order of S_n: the non-inversions of the meet are the
/// transitive closure of the union of non-inversions.
pub fn weak_meet(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    let non = InversionSet { n: u.n(), bits: inversion_set(u).complement().bits | inversion_set(v).complement().bits };
    Ok(non.closure().complement().to_permutation())
}

pub fn weak_join(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch(u.n(), v.n()));
    }
    let union = InversionSet { n: u.n(), bits: inversion_set(u).bits | inversion_set(v).bits };
    Ok(union.closure().to_permutation())
}

pub fn lower_covers(w: &Permutation) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = descent_pairs(w).into_iter().map(|(i, j)| w.swap_positions(i, j)).collect();
    out.sort();
    out
}

pub fn upper_covers(w: &Permutation) -> Vec<Permutation> {
    let inv = w.inverse();
    let mut out: Vec<Permutation> = (1..w.n())
        .filter_map(|v| {
            let (i, j) = (inv.at(v), inv.at(v + 1));
            (i < j).then(|| w.swap_positions(i, j))
        })
        .collect();
    out.sort();
    out
}

/// Inversions (i,j) with w_i = w_j + 1.
pub fn descent_pairs(w: &Permutation) -> Vec<(usize, usize)> {
    let inv = w.inverse();
    let mut out: Vec<(usize, usize)> = (1..w.n())
        .filter_map(|v| {
            let (i, j) = (inv.at(v + 1), inv.at(v));
            (i < j).then_some((i, j))
        })
        .collect();
    out.sort();
    out
}

/// The generator set J together with its region decomposition B(J).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct JContext {
    n: usize,
    in_j: Vec<bool>,
    regions: Vec<Vec<usize>>,
    region_of: Vec<usize>,
}

pub fn j_regions(n: usize, j_set: &[usize]) -> Result<JContext> {
    if n == 0 {
        return Err(Error::InvalidJ("n must be positive".into()));
    }
    let mut in_j = vec![false; n];
    for &j in j_set {
        if j == 0 || j >= n {
            return Err(Error::InvalidJ(format!("s{j} is not a generator of S_{n}")));
        }
        in_j[j] = true;
    }
    let mut regions = vec![vec![1]];
    for i in 2..=n {
        if in_j[i - 1] {
            regions.last_mut().unwrap().push(i);
        } else {
            regions.push(vec![i]);
        }
    }
    let mut region_of = vec![0; n + 1];
    for (r, block) in regions.iter().enumerate() {
        for &i in block {
            region_of[i] = r;
        }
    }
    Ok(JContext { n, in_j, regions, region_of })
}

impl JContext {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn regions(&self) -> &[Vec<usize>] {
        &self.regions
    }

    pub fn region_of(&self, i: usize) -> usize {
        self.region_of[i]
    }

    pub fn same_region(&self, i: usize, j: usize) -> bool {
        self.region_of[i] == self.region_of[j]
    }

    pub fn j_set(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| self.in_j[i]).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.in_j[i]
    }

    /// Indices k with s_k not in J, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (1..self.n).filter(|&i| !self.in_j[i]).collect()
    }

    pub fn all_subsets(n: usize) -> Vec<JContext> {
        let gens = n.saturating_sub(1);
        (0u32..1 << gens)
            .map(|mask| {
                let j: Vec<usize> = (1..n).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
                j_regions(n, &j).expect("valid subset")
            })
            .collect()
    }
}

pub fn is_quotient_member(w: &Permutation, ctx: &JContext) -> bool {
    w.n() == ctx.n() && ctx.regions().iter().all(|r| r.windows(2).all(|p| w.at(p[0]) < w.at(p[1])))
}

pub(crate) fn require_member(w: &Permutation, ctx: &JContext) -> Result<()> {
    if w.n() != ctx.n() {
        return Err(Error::SizeMismatch(w.n(), ctx.n()));
    }
    if !is_quotient_member(w, ctx) {
        return Err(Error::NotQuotientMember);
    }
    Ok(())
}

/// All members of S_n^J in lexicographic order of their one-line notation.
pub fn enumerate_quotient(ctx: &JContext) -> Vec<Permutation> {
    let n = ctx.n();
    let sizes: Vec<usize> = ctx.regions().iter().map(|r| r.len()).collect();
    // region label of each value, as a word; distinct words <-> quotient members
    let mut out = Vec::new();
    let mut labels = vec![0usize; n];
    let mut remaining = sizes.clone();
    fn rec(
        pos: usize,
        labels: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        ctx: &JContext,
        out: &mut Vec<Permutation>,
    ) {
        let n = labels.len();
        if pos == n {
            let mut values = vec![0; n];
            let mut next = vec![0usize; ctx.regions().len()];
            for (v, &r) in labels.iter().enumerate() {
                let p = ctx.regions()[r][next[r]];
                next[r] += 1;
                values[p - 1] = v + 1;
            }
            out.push(Permutation { values });
            return;
        }
        for r in 0..remaining.len() {
            if remaining[r] > 0 {
                remaining[r] -= 1;
                labels[pos] = r;
                rec(pos + 1, labels, remaining, ctx, out);
                remaining[r] += 1;
            }
        }
    }
    rec(0, &mut labels, &mut remaining, ctx, &mut out);
    out.sort();
    out
}

pub fn multinomial(ctx: &JContext) -> u128 {
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    ctx.regions().iter().fold(fact(ctx.n()), |acc, r| acc / fact(r.len()))
}

/// w_o^J: the first region receives the largest values, each region increasing.
pub fn quotient_longest(ctx: &JContext) -> Permutation {
    let n = ctx.n();
    let mut values = vec![0; n];
    let mut top = n;
    for region in ctx.regions() {
        let start = top + 1 - region.len();
        for (k, &p) in region.iter().enumerate() {
            values[p - 1] = start + k;
        }
        top -= region.len();
    }
    Permutation { values }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn inversion_examples() {
        assert!(inversion_set(&Permutation::identity(4)).is_empty());
        assert_eq!(inversion_set(&p("231")).pairs(), vec![(1, 3), (2, 3)]);
        assert_eq!(inversion_set(&p("4321")).len(), 6);
    }

    #[test]
    fn weak_order_examples() {
        assert!(weak_leq(&Permutation::identity(3), &p("312")).unwrap());
        assert!(weak_leq(&p("2143"), &p("3142")).unwrap());
        assert!(!weak_leq(&p("231"), &p("312")).unwrap());
        assert!(weak_leq(&p("12"), &p("123")).is_err());
    }

    #[test]
    fn covers_and_descents() {
        assert!(lower_covers(&Permutation::identity(3)).is_empty());
        assert_eq!(lower_covers(&p("213")), vec![p("123")]);
        assert_eq!(lower_covers(&p("3142")), vec![p("2143")]);
        assert_eq!(descent_pairs(&p("4231")), vec![(1, 3), (2, 4)]);
        assert_eq!(descent_pairs(&p("2143")), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn regions() {
        let c = j_regions(4, &[2]).unwrap();
        assert_eq!(c.regions(), &[vec![1], vec![2, 3], vec![4]]);
        let c = j_regions(10, &[1, 2, 3, 5, 8]).unwrap();
        assert_eq!(c.regions(), &[vec![1, 2, 3, 4], vec![5, 6], vec![7], vec![8, 9], vec![10]]);
        assert_eq!(j_regions(3, &[]).unwrap().regions().len(), 3);
        assert!(j_regions(3, &[3]).is_err());
    }

    #[test]
    fn quotient() {
        let c = j_regions(4, &[2]).unwrap();
        assert!(is_quotient_member(&p("4231"), &c));
        assert!(!is_quotient_member(&p("1324"), &c));
        assert_eq!(enumerate_quotient(&c).len(), 12);
        assert_eq!(quotient_longest(&c), p("4231"));
        assert_eq!(enumerate_quotient(&j_regions(3, &[]).unwrap()).len(), 6);
        assert_eq!(enumerate_quotient(&j_regions(4, &[1, 2, 3]).unwrap()).len(), 1);
        assert_eq!(quotient_longest(&j_regions(4, &[]).unwrap()), p("4321"));
        assert_eq!(quotient_longest(&j_regions(4, &[1, 2, 3]).unwrap()), p("1234"));
    }

    #[test]
    fn meet_and_join() {
        assert_eq!(weak_meet(&p("4132"), &p("3241")).unwrap(), p("3142"));
        let a = p("2314");
        assert_eq!(weak_join(&a, &Permutation::identity(4)).unwrap(), a);
    }

    #[test]
    fn parse_forms() {
        assert_eq!(p("4|23|1"), p("4 2 3 1"));
        assert_eq!("1 7 9 10 2 5 3 4 6 8".parse::<Permutation>().unwrap().n(), 10);
        assert!("1 1".parse::<Permutation>().is_err());
    }
}
