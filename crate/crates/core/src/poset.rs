//! Finite posets: Hasse diagrams, lattice tests, ideal counting, quotients by
//! interval partitions and isomorphism.

use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    covers: Vec<(usize, usize)>,
    /// below[b] contains a iff a <= b
    below: Vec<FixedBitSet>,
    above: Vec<FixedBitSet>,
    /// a linear extension
    topo: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    Meet,
    Join,
}

/// Outcome of a lattice test; failures carry the offending pair and its
/// maximal lower (or minimal upper) bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeCheck {
    Lattice,
    NotLattice { a: usize, b: usize, kind: Bound, bounds: Vec<usize> },
}

impl LatticeCheck {
    pub fn is_lattice(&self) -> bool {
        matches!(self, LatticeCheck::Lattice)
    }
}

fn bitset(n: usize) -> FixedBitSet {
    FixedBitSet::with_capacity(n)
}

impl FinitePoset {
    pub fn from_relation<F>(labels: Vec<String>, leq: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        let mut below = vec![bitset(n); n];
        for b in 0..n {
            for a in 0..n {
                if leq(a, b) {
                    below[b].insert(a);
                }
            }
        }
        for a in 0..n {
            if !below[a][a] {
                return Err(Error::NotPartialOrder(format!("{} is not <= itself", labels[a])));
            }
            for b in 0..a {
                if below[b][a] && below[a][b] {
                    return Err(Error::NotPartialOrder(format!(
                        "{} and {} are mutually related",
                        labels[a], labels[b]
                    )));
                }
            }
        }
        for c in 0..n {
            for b in below[c].ones().collect::<Vec<_>>() {
                if !below[b].is_subset(&below[c]) {
                    return Err(Error::NotPartialOrder(format!("transitivity fails through {}", labels[b])));
                }
            }
        }
        Ok(Self::from_order(labels, below))
    }

    /// Builds the order from a cover (or any generating) relation by transitive closure.
    pub fn from_covers(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::OutOfRange(format!("cover {a}<{b} with {n} elements")));
            }
            if a == b {
                return Err(Error::Cycle);
            }
            succ[a].push(b);
            indeg[b] += 1;
        }
        let mut order = Vec::with_capacity(n);
        let mut stack: Vec<usize> = (0..n).rev().filter(|&v| indeg[v] == 0).collect();
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &succ[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Cycle);
        }
        let mut below = vec![bitset(n); n];
        let mut pred = vec![Vec::new(); n];
        for &(a, b) in edges {
            pred[b].push(a);
        }
        for &v in &order {
            below[v].insert(v);
            for &p in &pred[v] {
                let bp = below[p].clone();
                below[v].union_with(&bp);
            }
        }
        Ok(Self::from_order(labels, below))
    }

    fn from_order(labels: Vec<String>, below: Vec<FixedBitSet>) -> Self {
        let n = labels.len();
        let mut above = vec![bitset(n); n];
        for b in 0..n {
            for a in below[b].ones() {
                above[a].insert(b);
            }
        }
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&v| (below[v].count_ones(..), v));
        let mut covers = Vec::new();
        for b in 0..n {
            let mut strict = below[b].clone();
            strict.set(b, false);
            let mut reach = bitset(n);
            for a in strict.ones() {
                let mut s = below[a].clone();
                s.set(a, false);
                reach.union_with(&s);
            }
            strict.difference_with(&reach);
            for a in strict.ones() {
                covers.push((a, b));
            }
        }
        covers.sort();
        FinitePoset { labels, covers, below, above, topo }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.below[b][a]
    }

    pub fn down_set(&self, a: usize) -> &FixedBitSet {
        &self.below[a]
    }

    pub fn up_set(&self, a: usize) -> &FixedBitSet {
        &self.above[a]
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.below[v].count_ones(..) == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.above[v].count_ones(..) == 1).collect()
    }

    pub fn dual(&self) -> FinitePoset {
        let below = self.above.clone();
        Self::from_order(self.labels.clone(), below)
    }

    /// Induced subposet on `elems` (in the given order).
    pub fn subposet(&self, elems: &[usize]) -> FinitePoset {
        let labels = elems.iter().map(|&e| self.labels[e].clone()).collect();
        let n = elems.len();
        let mut below = vec![bitset(n); n];
        for (j, &b) in elems.iter().enumerate() {
            for (i, &a) in elems.iter().enumerate() {
                if self.leq(a, b) {
                    below[j].insert(i);
                }
            }
        }
        Self::from_order(labels, below)
    }

    /// Elements of the order filter generated by `gens`, in index order.
    pub fn filter_elements(&self, gens: &[usize]) -> Vec<usize> {
        let mut s = bitset(self.len());
        for &g in gens {
            s.union_with(&self.above[g]);
        }
        s.ones().collect()
    }

    fn bound_set(&self, a: usize, b: usize, kind: &Bound) -> Vec<usize> {
        let (sets, other) = match kind {
            Bound::Meet => (&self.below, &self.above),
            Bound::Join => (&self.above, &self.below),
        };
        let mut common = sets[a].clone();
        common.intersect_with(&sets[b]);
        // extremal elements of the common bound set
        common
            .ones()
            .filter(|&x| {
                let mut beyond = other[x].clone();
                beyond.set(x, false);
                beyond.is_disjoint(&common)
            })
            .collect()
    }

    pub fn maximal_lower_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        self.bound_set(a, b, &Bound::Meet)
    }

    pub fn minimal_upper_bounds(&self, a: usize, b: usize) -> Vec<usize> {
        self.bound_set(a, b, &Bound::Join)
    }

    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        match self.maximal_lower_bounds(a, b).as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::NoUniqueBound(a, b)),
        }
    }

    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        match self.minimal_upper_bounds(a, b).as_slice() {
            [m] => Ok(*m),
            _ => Err(Error::NoUniqueBound(a, b)),
        }
    }

    /// Checks every pair for a unique meet and join (meets first).
    pub fn is_lattice(&self) -> LatticeCheck {
        for kind in [Bound::Meet, Bound::Join] {
            for a in 0..self.len() {
                for b in a + 1..self.len() {
                    let bounds = self.bound_set(a, b, &kind);
                    if bounds.len() != 1 {
                        return LatticeCheck::NotLattice { a, b, kind, bounds };
                    }
                }
            }
        }
        LatticeCheck::Lattice
    }

    /// Number of down-closed subsets, by splitting on a maximal surviving element.
    pub fn count_ideals(&self) -> u128 {
        let n = self.len();
        let mut memo: HashMap<FixedBitSet, u128> = HashMap::new();
        let mut all = bitset(n);
        all.insert_range(..);
        self.count_rec(all, &mut memo)
    }

    fn count_rec(&self, avail: FixedBitSet, memo: &mut HashMap<FixedBitSet, u128>) -> u128 {
        if avail.is_clear() {
            return 1;
        }
        if let Some(&v) = memo.get(&avail) {
            return v;
        }
        let m = *self.topo.iter().rev().find(|&&v| avail[v]).expect("nonempty");
        let mut without = avail.clone();
        without.set(m, false);
        let mut with = avail.clone();
        with.difference_with(&self.below[m]);
        let total = self.count_rec(without, memo) + self.count_rec(with, memo);
        memo.insert(avail, total);
        total
    }

    /// All order ideals, each as a bit set over the elements.
    pub fn ideals(&self) -> Vec<FixedBitSet> {
        let n = self.len();
        let mut out = Vec::new();
        let mut current = bitset(n);
        self.ideals_rec(0, &mut current, &mut out);
        out
    }

    fn ideals_rec(&self, k: usize, current: &mut FixedBitSet, out: &mut Vec<FixedBitSet>) {
        if k == self.len() {
            out.push(current.clone());
            return;
        }
        let v = self.topo[k];
        self.ideals_rec(k + 1, current, out);
        let mut strict = self.below[v].clone();
        strict.set(v, false);
        if strict.is_subset(current) {
            current.insert(v);
            self.ideals_rec(k + 1, current, out);
            current.set(v, false);
        }
    }

    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones().all(|v| self.below[v].is_subset(set))
    }

    /// Quotient by a partition into classes. Each class must be an interval and
    /// the maps to class bottoms and tops must be order-preserving.
    pub fn quotient(&self, classes: &[Vec<usize>]) -> Result<FinitePoset> {
        let n = self.len();
        let mut class_of = vec![usize::MAX; n];
        for (c, members) in classes.iter().enumerate() {
            for &m in members {
                if m >= n || class_of[m] != usize::MAX {
                    return Err(Error::Congruence(format!("element {m} not in exactly one class")));
                }
                class_of[m] = c;
            }
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::Congruence("classes do not cover the poset".into()));
        }
        let mut bottoms = Vec::with_capacity(classes.len());
        let mut tops = Vec::with_capacity(classes.len());
        for (c, members) in classes.iter().enumerate() {
            let bot = members.iter().copied().find(|&b| members.iter().all(|&m| self.leq(b, m)));
            let top = members.iter().copied().find(|&t| members.iter().all(|&m| self.leq(m, t)));
            let (Some(bot), Some(top)) = (bot, top) else {
                return Err(Error::Congruence(format!("class {c} has no bottom or top")));
            };
            let mut interval = self.above[bot].clone();
            interval.intersect_with(&self.below[top]);
            if interval.count_ones(..) != members.len() {
                return Err(Error::Congruence(format!(
                    "class of {} is not the interval [{}, {}]",
                    self.labels[members[0]], self.labels[bot], self.labels[top]
                )));
            }
            bottoms.push(bot);
            tops.push(top);
        }
        for &(a, b) in &self.covers {
            let (ca, cb) = (class_of[a], class_of[b]);
            if !self.leq(bottoms[ca], bottoms[cb]) || !self.leq(tops[ca], tops[cb]) {
                return Err(Error::Congruence(format!(
                    "projection not order-preserving on {} < {}",
                    self.labels[a], self.labels[b]
                )));
            }
        }
        let labels = bottoms.iter().map(|&b| self.labels[b].clone()).collect();
        FinitePoset::from_relation(labels, |x, y| self.leq(bottoms[x], bottoms[y]))
    }

    /// Exact isomorphism test: invariant refinement followed by backtracking.
    pub fn is_isomorphic(&self, other: &FinitePoset) -> bool {
        self.isomorphism(other).is_some()
    }

    pub fn isomorphism(&self, other: &FinitePoset) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() || self.covers.len() != other.covers.len() {
            return None;
        }
        let inv_a = self.invariants();
        let inv_b = other.invariants();
        let mut sa = inv_a.clone();
        let mut sb = inv_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return None;
        }
        let order = self.topo.clone();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        let mut by_inv: HashMap<&Invariant, Vec<usize>> = HashMap::new();
        for (v, inv) in inv_b.iter().enumerate() {
            by_inv.entry(inv).or_default().push(v);
        }
        if self.iso_rec(other, &order, 0, &mut map, &mut used, &inv_a, &by_inv) {
            Some(map)
        } else {
            None
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn iso_rec(
        &self,
        other: &FinitePoset,
        order: &[usize],
        k: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        inv_a: &[Invariant],
        by_inv: &HashMap<&Invariant, Vec<usize>>,
    ) -> bool {
        if k == order.len() {
            return true;
        }
        let v = order[k];
        let Some(cands) = by_inv.get(&inv_a[v]) else {
            return false;
        };
        for &c in cands {
            if used[c] {
                continue;
            }
            // elements mapped so far are exactly those earlier in `order`
            let consistent = order[..k].iter().all(|&u| {
                let mu = map[u];
                self.leq(u, v) == other.leq(mu, c) && self.leq(v, u) == other.leq(c, mu)
            });
            if !consistent {
                continue;
            }
            map[v] = c;
            used[c] = true;
            if self.iso_rec(other, order, k + 1, map, used, inv_a, by_inv) {
                return true;
            }
            used[c] = false;
            map[v] = usize::MAX;
        }
        false
    }

    fn invariants(&self) -> Vec<Invariant> {
        let n = self.len();
        let mut up = vec![0usize; n];
        let mut down = vec![0usize; n];
        for &(a, b) in &self.covers {
            up[a] += 1;
            down[b] += 1;
        }
        (0..n)
            .map(|v| Invariant {
                below: self.below[v].count_ones(..),
                above: self.above[v].count_ones(..),
                up: up[v],
                down: down[v],
            })
            .collect()
    }

    /// Graphviz rendering, bottom to top.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"{name}\" {{");
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=plaintext];");
        for (i, l) in self.labels.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{}\"];", l.replace('"', "\\\""));
        }
        for &(a, b) in &self.covers {
            let _ = writeln!(s, "  n{a} -> n{b};");
        }
        s.push_str("}\n");
        s
    }

    /// Plain cover list, one `a<b` per line.
    pub fn to_cover_list(&self) -> String {
        self.covers.iter().map(|(a, b)| format!("{a}<{b}\n")).collect()
    }

    pub fn parse_cover_list(labels: Vec<String>, text: &str) -> Result<FinitePoset> {
        let mut edges = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (a, b) = line.split_once('<').ok_or_else(|| Error::Parse(format!("expected a<b, got {line:?}")))?;
            let a = a.trim().parse().map_err(|_| Error::Parse(line.into()))?;
            let b = b.trim().parse().map_err(|_| Error::Parse(line.into()))?;
            edges.push((a, b));
        }
        FinitePoset::from_covers(labels, &edges)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Invariant {
    below: usize,
    above: usize,
    up: usize,
    down: usize,
}

pub fn chain(k: usize) -> FinitePoset {
    let labels = (0..k).map(|i| i.to_string()).collect();
    FinitePoset::from_relation(labels, |a, b| a <= b).expect("chain")
}

pub fn antichain(k: usize) -> FinitePoset {
    let labels = (0..k).map(|i| i.to_string()).collect();
    FinitePoset::from_relation(labels, |a, b| a == b).expect("antichain")
}
