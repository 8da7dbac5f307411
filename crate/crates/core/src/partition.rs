//! J-noncrossing and J-nonnesting set partitions, the bump poset, the
//! bijections with (J,231)-avoiding permutations and between the two partition
//! families, Ferrers shapes and the Kreweras determinant.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{descent_pairs, require_member, JContext, Permutation};
use crate::poset::FinitePoset;
use crate::tamari::is_j231_avoiding;

/// Parts sorted by minimum, each part ascending.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    n: usize,
    parts: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut parts: Vec<Vec<usize>> = parts
            .into_iter()
            .map(|mut p| {
                p.sort_unstable();
                p
            })
            .collect();
        for part in &parts {
            if part.is_empty() {
                return Err(Error::InvalidPartition("empty part".into()));
            }
            for &x in part {
                if x == 0 || x > n || seen[x] {
                    return Err(Error::InvalidPartition(format!("element {x}")));
                }
                seen[x] = true;
            }
        }
        if seen[1..].iter().any(|s| !s) {
            return Err(Error::InvalidPartition("parts do not cover [n]".into()));
        }
        parts.sort();
        Ok(SetPartition { n, parts })
    }

    pub fn singletons(n: usize) -> Self {
        SetPartition { n, parts: (1..=n).map(|i| vec![i]).collect() }
    }

    /// The partition generated by the given pairs (as edges).
    pub fn from_bumps(n: usize, bumps: &[(usize, usize)]) -> Result<Self> {
        let mut parent: Vec<usize> = (0..=n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for &(a, b) in bumps {
            if a == 0 || b > n || a >= b {
                return Err(Error::InvalidPartition(format!("bump ({a},{b})")));
            }
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for x in 1..=n {
            let r = find(&mut parent, x);
            groups.entry(r).or_default().push(x);
        }
        SetPartition::new(n, groups.into_values().collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    fn part_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n + 1];
        for (p, part) in self.parts.iter().enumerate() {
            for &x in part {
                idx[x] = p;
            }
        }
        idx
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|p| {
                let e: Vec<String> = p.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", e.join(","))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn bumps(p: &SetPartition) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = p.parts.iter().flat_map(|part| part.windows(2).map(|w| (w[0], w[1]))).collect();
    out.sort();
    out
}

fn no_part_repeats_region(p: &SetPartition, ctx: &JContext) -> bool {
    p.parts.iter().all(|part| {
        let mut regions: Vec<usize> = part.iter().map(|&x| ctx.region_of(x)).collect();
        regions.dedup();
        regions.len() == part.len()
    })
}

pub fn is_j_noncrossing(p: &SetPartition, ctx: &JContext) -> bool {
    if p.n != ctx.n() || !no_part_repeats_region(p, ctx) {
        return false;
    }
    let bs = bumps(p);
    for &(i1, i2) in &bs {
        for &(j1, j2) in &bs {
            if (i1, i2) == (j1, j2) {
                continue;
            }
            if i1 < j1 && j1 < i2 && i2 < j2 && !ctx.same_region(i1, j1) && !ctx.same_region(i2, j1) {
                return false;
            }
            if i1 < j1 && j2 < i2 && ctx.same_region(i1, j1) {
                return false;
            }
        }
    }
    true
}

pub fn is_j_nonnesting(p: &SetPartition, ctx: &JContext) -> bool {
    if p.n != ctx.n() || !no_part_repeats_region(p, ctx) {
        return false;
    }
    let bs = bumps(p);
    !bs.iter().any(|&(i1, i2)| bs.iter().any(|&(j1, j2)| i1 < j1 && j2 < i2))
}

pub fn perm_to_nc(w: &Permutation, ctx: &JContext) -> Result<SetPartition> {
    require_member(w, ctx)?;
    if !is_j231_avoiding(w, ctx) {
        return Err(Error::NotAvoiding);
    }
    SetPartition::from_bumps(w.n(), &descent_pairs(w))
}

/// Poset on the parts of a J-noncrossing partition. A part B lies below B′ when
/// a bump of B passes over min B′ and min B′ is outside the region of the
/// bump's opener (in the arc model such arcs pass below min B′ instead).
pub fn bump_poset(p: &SetPartition, ctx: &JContext) -> Result<FinitePoset> {
    if !is_j_noncrossing(p, ctx) {
        return Err(Error::NotNoncrossing);
    }
    let edges = bump_relation(p, ctx);
    let labels = p.parts.iter().map(|part| format!("{part:?}")).collect();
    FinitePoset::from_covers(labels, &edges)
}

fn bump_relation(p: &SetPartition, ctx: &JContext) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (b, part) in p.parts.iter().enumerate() {
        for w in part.windows(2) {
            let (i1, i2) = (w[0], w[1]);
            for (c, other) in p.parts.iter().enumerate() {
                let m = other[0];
                if c != b && i1 < m && m < i2 && !ctx.same_region(i1, m) {
                    edges.push((b, c));
                }
            }
        }
    }
    edges.sort();
    edges.dedup();
    edges
}

pub fn nc_to_perm(p: &SetPartition, ctx: &JContext) -> Result<Permutation> {
    let poset = bump_poset(p, ctx)?;
    let part_of = p.part_index();
    let mut values = vec![0; p.n];
    let positions: Vec<usize> = (1..=p.n).collect();
    assign_values(&positions, 1, &part_of, &poset, &mut values);
    Ok(Permutation::from_vec_unchecked(values))
}

/// Recursive step on an ordered set of positions (the restriction of P to them),
/// writing values offset, offset+1, ...
fn assign_values(positions: &[usize], offset: usize, part_of: &[usize], poset: &FinitePoset, values: &mut [usize]) {
    let Some(&first) = positions.first() else {
        return;
    };
    let bar = part_of[first];
    let in_x = |x: usize| poset.leq(bar, part_of[x]);
    let x_count = positions.iter().filter(|&&x| in_x(x)).count();
    let bar_elems: Vec<usize> = positions.iter().copied().filter(|&x| part_of[x] == bar).collect();
    for (k, &x) in bar_elems.iter().enumerate() {
        values[x - 1] = offset + x_count - 1 - k;
    }
    let left: Vec<usize> = positions.iter().copied().filter(|&x| in_x(x) && part_of[x] != bar).collect();
    let right: Vec<usize> = positions.iter().copied().filter(|&x| !in_x(x)).collect();
    assign_values(&left, offset, part_of, poset, values);
    assign_values(&right, offset + x_count, part_of, poset, values);
}

/// Transpositions (i,j), i<j in distinct regions, ordered by
/// (i1,i2) <= (j1,j2) iff i1 >= j1 and i2 <= j2.
pub fn parabolic_root_poset_a(ctx: &JContext) -> (FinitePoset, Vec<(usize, usize)>) {
    let n = ctx.n();
    let mut elems = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if !ctx.same_region(i, j) {
                elems.push((i, j));
            }
        }
    }
    let labels = elems.iter().map(|(i, j)| format!("({i},{j})")).collect();
    let poset = FinitePoset::from_relation(labels, |a, b| {
        let (i1, i2) = elems[a];
        let (j1, j2) = elems[b];
        i1 >= j1 && i2 <= j2
    })
    .expect("containment of intervals is a partial order");
    (poset, elems)
}

pub fn ideal_to_nn(ideal: &FixedBitSet, ctx: &JContext) -> Result<SetPartition> {
    let (poset, elems) = parabolic_root_poset_a(ctx);
    ideal_to_nn_in(ideal, &poset, &elems, ctx.n())
}

fn ideal_to_nn_in(
    ideal: &FixedBitSet,
    poset: &FinitePoset,
    elems: &[(usize, usize)],
    n: usize,
) -> Result<SetPartition> {
    let mut ideal = ideal.clone();
    ideal.grow(poset.len());
    if !poset.is_ideal(&ideal) {
        return Err(Error::NotDownClosed);
    }
    let minimal: Vec<(usize, usize)> = (0..poset.len())
        .filter(|&v| !ideal[v])
        .filter(|&v| poset.down_set(v).ones().all(|u| u == v || ideal[u]))
        .map(|v| elems[v])
        .collect();
    SetPartition::from_bumps(n, &minimal)
}

pub fn nn_to_ideal(p: &SetPartition, ctx: &JContext) -> Result<FixedBitSet> {
    if !is_j_nonnesting(p, ctx) {
        return Err(Error::NotNonnesting);
    }
    let (poset, elems) = parabolic_root_poset_a(ctx);
    let index: HashMap<(usize, usize), usize> = elems.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut complement = FixedBitSet::with_capacity(poset.len());
    for b in bumps(p) {
        complement.union_with(poset.up_set(index[&b]));
    }
    complement.toggle_range(..);
    Ok(complement)
}

pub fn enumerate_nn(ctx: &JContext) -> Vec<SetPartition> {
    let (poset, elems) = parabolic_root_poset_a(ctx);
    let mut out: Vec<SetPartition> =
        poset.ideals().iter().map(|i| ideal_to_nn_in(i, &poset, &elems, ctx.n()).expect("ideal")).collect();
    out.sort();
    out
}

/// All set partitions of [n] with no two elements of a part in one region.
fn region_respecting_partitions(ctx: &JContext) -> Vec<SetPartition> {
    let n = ctx.n();
    let mut out = Vec::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    fn rec(x: usize, n: usize, ctx: &JContext, parts: &mut Vec<Vec<usize>>, out: &mut Vec<SetPartition>) {
        if x > n {
            out.push(SetPartition { n, parts: parts.clone() });
            return;
        }
        for k in 0..parts.len() {
            let last = *parts[k].last().unwrap();
            if !ctx.same_region(last, x) {
                parts[k].push(x);
                rec(x + 1, n, ctx, parts, out);
                parts[k].pop();
            }
        }
        parts.push(vec![x]);
        rec(x + 1, n, ctx, parts, out);
        parts.pop();
    }
    rec(1, n, ctx, &mut parts, &mut out);
    out
}

pub fn enumerate_nc(ctx: &JContext) -> Vec<SetPartition> {
    let mut out: Vec<SetPartition> =
        region_respecting_partitions(ctx).into_iter().filter(|p| is_j_noncrossing(p, ctx)).collect();
    out.sort();
    out
}

/// Shared data for one recursion level of the NN/NC bijection: the regions
/// from the second one on, as absolute positions.
struct Level<'a> {
    ctx: &'a JContext,
    first: usize,
}

impl Level<'_> {
    fn regions(&self) -> &[Vec<usize>] {
        &self.ctx.regions()[self.first..]
    }
}

/// Columns of piece A supported by the nonnesting bumps of piece B: the second
/// region, then further j as long as (k1+1, j) stays in the ideal, i.e. j is
/// below every bump endpoint of piece B.
fn supported_columns(level: &Level, nn_tail: &[(usize, usize)]) -> Vec<usize> {
    let regions = level.regions();
    let mut cols = regions[1].clone();
    let bound = nn_tail.iter().map(|&(_, d)| d).min().unwrap_or(usize::MAX);
    let last = *regions.last().unwrap().last().unwrap();
    let start = *regions[1].last().unwrap() + 1;
    cols.extend((start..=last).take_while(|&j| j < bound));
    cols
}

/// Allowed endpoints for noncrossing bumps out of the first region: the second
/// region, then the part minima b beyond it that no bump passes over from a
/// different region.
fn target_columns(level: &Level, nc_tail: &[(usize, usize)]) -> Vec<usize> {
    let ctx = level.ctx;
    let regions = level.regions();
    let k2 = *regions[1].last().unwrap();
    let last = *regions.last().unwrap().last().unwrap();
    let has_incoming: BTreeSet<usize> = nc_tail.iter().map(|&(_, d)| d).collect();
    let mut cols = regions[1].clone();
    for b in k2 + 1..=last {
        if has_incoming.contains(&b) {
            continue;
        }
        let covered = nc_tail.iter().any(|&(c, d)| c < b && b < d && !ctx.same_region(c, b));
        if !covered {
            cols.push(b);
        }
    }
    cols
}

fn nn_to_nc_bumps(level: &Level, nn: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let regions = level.regions();
    if regions.len() <= 1 {
        return Ok(Vec::new());
    }
    let first = &regions[0];
    let (lo, k1) = (first[0], *first.last().unwrap());
    let (head, tail): (Vec<_>, Vec<_>) = nn.iter().partition(|&&(a, _)| a <= k1);
    let sub = Level { ctx: level.ctx, first: level.first + 1 };
    let mut nc = nn_to_nc_bumps(&sub, &tail)?;
    let supported = supported_columns(level, &tail);
    let targets = target_columns(level, &nc);
    if supported.len() != targets.len() {
        return Err(Error::NotNonnesting);
    }
    let s = supported.len();
    for (a, j) in head {
        let c = supported.iter().position(|&x| x == j).ok_or(Error::NotNonnesting)?;
        nc.push((lo + k1 - a, targets[s - 1 - c]));
    }
    nc.sort();
    Ok(nc)
}

fn nc_to_nn_bumps(level: &Level, nc: &[(usize, usize)]) -> Result<Vec<(usize, usize)>> {
    let regions = level.regions();
    if regions.len() <= 1 {
        return Ok(Vec::new());
    }
    let first = &regions[0];
    let (lo, k1) = (first[0], *first.last().unwrap());
    let (head, tail): (Vec<_>, Vec<_>) = nc.iter().partition(|&&(a, _)| a <= k1);
    let sub = Level { ctx: level.ctx, first: level.first + 1 };
    let mut nn = nc_to_nn_bumps(&sub, &tail)?;
    let supported = supported_columns(level, &nn);
    let targets = target_columns(level, &tail);
    if supported.len() != targets.len() {
        return Err(Error::NotNoncrossing);
    }
    let s = supported.len();
    for (a, t) in head {
        let p = targets.iter().position(|&x| x == t).ok_or(Error::NotNoncrossing)?;
        nn.push((lo + k1 - a, supported[s - 1 - p]));
    }
    nn.sort();
    Ok(nn)
}

pub fn nn_to_nc(p: &SetPartition, ctx: &JContext) -> Result<SetPartition> {
    if !is_j_nonnesting(p, ctx) {
        return Err(Error::NotNonnesting);
    }
    let level = Level { ctx, first: 0 };
    let out = SetPartition::from_bumps(p.n, &nn_to_nc_bumps(&level, &bumps(p))?)?;
    debug_assert!(is_j_noncrossing(&out, ctx));
    Ok(out)
}

pub fn nc_to_nn(p: &SetPartition, ctx: &JContext) -> Result<SetPartition> {
    if !is_j_noncrossing(p, ctx) {
        return Err(Error::NotNoncrossing);
    }
    let level = Level { ctx, first: 0 };
    SetPartition::from_bumps(p.n, &nc_to_nn_bumps(&level, &bumps(p))?)
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct FerrersShape {
    rows: Vec<usize>,
}

impl FerrersShape {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("not a Ferrers shape: {rows:?}")));
        }
        Ok(FerrersShape { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cells(&self) -> usize {
        self.rows.iter().sum()
    }

    /// Number of shapes fitting inside, by direct enumeration.
    pub fn count_subshapes(&self) -> u128 {
        fn rec(rows: &[usize], cap: usize) -> u128 {
            match rows.split_first() {
                None => 1,
                Some((&r, rest)) => (0..=r.min(cap)).map(|x| rec(rest, x)).sum(),
            }
        }
        rec(&self.rows, usize::MAX)
    }
}

/// λ_n^J = (j_r^{n-j_r}, ..., j_1^{j_2-j_1}) for the generators s_{j_1},...,s_{j_r} outside J.
pub fn bounding_shape(ctx: &JContext) -> FerrersShape {
    let js = ctx.complement();
    let mut rows = Vec::new();
    for (idx, &j) in js.iter().enumerate().rev() {
        let next = js.get(idx + 1).copied().unwrap_or(ctx.n());
        rows.extend(std::iter::repeat_n(j, next - j));
    }
    FerrersShape { rows }
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) / (i + 1))
}

/// Fraction-free (Bareiss) determinant over the integers.
pub fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let k = m.len();
    if k == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for c in 0..k {
        if m[c][c] == 0 {
            match (c + 1..k).find(|&r| m[r][c] != 0) {
                Some(r) => {
                    m.swap(c, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for r in c + 1..k {
            for col in c + 1..k {
                m[r][col] = (m[r][col] * m[c][c] - m[r][c] * m[c][col]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    sign * m[k - 1][k - 1]
}

/// det [binom(λ_j + 1, j − i + 1)]_{i,j}.
pub fn kreweras_count(shape: &FerrersShape) -> u128 {
    let k = shape.rows.len();
    let m = (0..k)
        .map(|i| (0..k).map(|j| binomial(shape.rows[j] as i128 + 1, j as i128 - i as i128 + 1)).collect())
        .collect();
    bareiss_det(m) as u128
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub avoiding: usize,
    pub noncrossing: usize,
    pub nonnesting: usize,
    pub perm_round_trips: bool,
    pub partition_round_trips: bool,
    pub images_valid: bool,
    /// Counts are sample sizes rather than family cardinalities.
    pub sampled: bool,
    pub failures: Vec<String>,
}

impl BijectionReport {
    pub fn passed(&self) -> bool {
        (self.sampled || (self.avoiding == self.noncrossing && self.noncrossing == self.nonnesting))
            && self.perm_round_trips
            && self.partition_round_trips
            && self.images_valid
    }
}

/// Checks both bijections element by element over the full families.
pub fn verify_bijections(ctx: &JContext) -> BijectionReport {
    let avoiding = crate::tamari::avoiding_elements(ctx);
    let nc = enumerate_nc(ctx);
    let nn = enumerate_nn(ctx);
    let mut report = BijectionReport {
        avoiding: avoiding.len(),
        noncrossing: nc.len(),
        nonnesting: nn.len(),
        perm_round_trips: true,
        partition_round_trips: true,
        images_valid: true,
        sampled: false,
        failures: Vec::new(),
    };
    check_perms(ctx, &avoiding, &mut report);
    let nc_images: BTreeSet<SetPartition> = avoiding.iter().filter_map(|w| perm_to_nc(w, ctx).ok()).collect();
    if nc_images.len() != nc.len() || !nc.iter().all(|p| nc_images.contains(p)) {
        report.images_valid = false;
        report.failures.push("perm_to_nc is not onto the noncrossing partitions".into());
    }
    check_partitions(ctx, &nn, &mut report);
    report
}

/// Round trips on a given subset of avoiding permutations and nonnesting partitions.
pub fn verify_bijection_sample(ctx: &JContext, perms: &[Permutation], nn: &[SetPartition]) -> BijectionReport {
    let mut report = BijectionReport {
        avoiding: perms.len(),
        noncrossing: perms.len(),
        nonnesting: nn.len(),
        perm_round_trips: true,
        partition_round_trips: true,
        images_valid: true,
        sampled: true,
        failures: Vec::new(),
    };
    check_perms(ctx, perms, &mut report);
    check_partitions(ctx, nn, &mut report);
    report
}

fn check_perms(ctx: &JContext, perms: &[Permutation], report: &mut BijectionReport) {
    for w in perms {
        match perm_to_nc(w, ctx) {
            Ok(p) => {
                if !is_j_noncrossing(&p, ctx) {
                    report.images_valid = false;
                    report.failures.push(format!("{} maps to a crossing partition {p}", w.display_with(ctx)));
                }
                if nc_to_perm(&p, ctx).as_ref() != Ok(w) {
                    report.perm_round_trips = false;
                    report.failures.push(format!("{} does not round-trip", w.display_with(ctx)));
                }
            }
            Err(e) => {
                report.images_valid = false;
                report.failures.push(format!("{}: {e}", w.display_with(ctx)));
            }
        }
    }
}

fn check_partitions(ctx: &JContext, nn: &[SetPartition], report: &mut BijectionReport) {
    for p in nn {
        match nn_to_nc(p, ctx) {
            Ok(q) => {
                if !is_j_noncrossing(&q, ctx) {
                    report.images_valid = false;
                    report.failures.push(format!("{p} maps to a crossing partition {q}"));
                }
                if nc_to_nn(&q, ctx).as_ref() != Ok(p) {
                    report.partition_round_trips = false;
                    report.failures.push(format!("{p} does not round-trip"));
                }
            }
            Err(e) => {
                report.images_valid = false;
                report.failures.push(format!("{p}: {e}"));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::j_regions;
    use crate::tamari::avoiding_elements;

    fn fig_ctx() -> JContext {
        j_regions(10, &[1, 2, 3, 5, 8]).unwrap()
    }

    fn fig_nc() -> SetPartition {
        SetPartition::from_bumps(10, &[(2, 9), (3, 10), (6, 8)]).unwrap()
    }

    fn fig_nn() -> SetPartition {
        SetPartition::new(10, vec![vec![1], vec![2, 5, 9], vec![3, 6], vec![4], vec![7], vec![8], vec![10]]).unwrap()
    }

    #[test]
    fn bump_examples() {
        assert!(bumps(&SetPartition::singletons(5)).is_empty());
        let b = bumps(&fig_nn());
        assert!(b.contains(&(2, 5)) && b.contains(&(5, 9)) && b.contains(&(3, 6)));
        assert_eq!(bumps(&SetPartition::new(3, vec![vec![1, 2, 3]]).unwrap()), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn predicates() {
        let c = fig_ctx();
        assert!(is_j_noncrossing(&fig_nc(), &c));
        assert!(is_j_nonnesting(&fig_nn(), &c));
        let crossing = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(!is_j_noncrossing(&crossing, &j_regions(4, &[]).unwrap()));
        assert!(is_j_noncrossing(&crossing, &j_regions(4, &[2]).unwrap()));
        let nesting = SetPartition::new(4, vec![vec![1, 4], vec![2, 3]]).unwrap();
        assert!(!is_j_nonnesting(&nesting, &j_regions(4, &[]).unwrap()));
        assert!(is_j_nonnesting(&SetPartition::singletons(4), &j_regions(4, &[]).unwrap()));
    }

    #[test]
    fn permutation_bijection_examples() {
        let c = fig_ctx();
        let w: Permutation = "1 7 9 10 2 5 3 4 6 8".parse().unwrap();
        assert_eq!(bumps(&perm_to_nc(&w, &c).unwrap()), vec![(2, 9), (3, 10), (6, 8)]);
        assert_eq!(nc_to_perm(&fig_nc(), &c).unwrap(), w);
        let c4 = j_regions(4, &[2]).unwrap();
        let top: Permutation = "4231".parse().unwrap();
        let p = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(perm_to_nc(&top, &c4).unwrap(), p);
        assert_eq!(nc_to_perm(&p, &c4).unwrap(), top);
        assert_eq!(
            nc_to_perm(&SetPartition::singletons(5), &j_regions(5, &[]).unwrap()).unwrap(),
            Permutation::identity(5)
        );
    }

    #[test]
    fn bump_poset_examples() {
        let c = fig_ctx();
        let p = fig_nc();
        let o = bump_poset(&p, &c).unwrap();
        let idx = |part: &[usize]| p.parts().iter().position(|q| q == part).unwrap();
        assert!(o.leq(idx(&[6, 8]), idx(&[7])));
        for upper in [&[5][..], &[6, 8][..]] {
            assert!(o.leq(idx(&[2, 9]), idx(upper)));
        }
        assert!(!o.leq(idx(&[2, 9]), idx(&[3, 10])));
        let small = SetPartition::new(3, vec![vec![1, 3], vec![2]]).unwrap();
        let o = bump_poset(&small, &j_regions(3, &[]).unwrap()).unwrap();
        assert!(o.leq(0, 1));
        assert_eq!(bump_poset(&SetPartition::singletons(4), &j_regions(4, &[]).unwrap()).unwrap().covers().len(), 0);
    }

    #[test]
    fn root_poset_and_ideals() {
        let (p, _) = parabolic_root_poset_a(&j_regions(3, &[]).unwrap());
        assert_eq!(p.len(), 3);
        assert_eq!(p.maximal_elements().len(), 1);
        let (p, elems) = parabolic_root_poset_a(&fig_ctx());
        assert_eq!(p.len(), 37);
        assert_eq!(parabolic_root_poset_a(&j_regions(2, &[1]).unwrap()).0.len(), 0);
        // the worked ideal: everything not above the bumps (2,5), (3,6), (5,9)
        let ideal = nn_to_ideal(&fig_nn(), &fig_ctx()).unwrap();
        assert_eq!(ideal_to_nn(&ideal, &fig_ctx()).unwrap(), fig_nn());
        let mut full = FixedBitSet::with_capacity(p.len());
        full.insert_range(..);
        assert_eq!(ideal_to_nn(&full, &fig_ctx()).unwrap(), SetPartition::singletons(10));
        let empty = FixedBitSet::with_capacity(p.len());
        let minima: Vec<_> = p.minimal_elements().into_iter().map(|v| elems[v]).collect();
        assert_eq!(bumps(&ideal_to_nn(&empty, &fig_ctx()).unwrap()), {
            let mut m = minima;
            m.sort();
            m
        });
    }

    #[test]
    fn nn_nc_examples() {
        let c = fig_ctx();
        assert_eq!(nn_to_nc(&fig_nn(), &c).unwrap(), fig_nc());
        assert_eq!(nc_to_nn(&fig_nc(), &c).unwrap(), fig_nn());
        let s = SetPartition::singletons(10);
        assert_eq!(nn_to_nc(&s, &c).unwrap(), s);
        assert_eq!(nc_to_nn(&s, &c).unwrap(), s);
    }

    #[test]
    fn maximal_parabolic_sets_coincide() {
        for n in 2..=7 {
            for k in 1..n {
                let j: Vec<usize> = (1..n).filter(|&i| i != k).collect();
                let c = j_regions(n, &j).unwrap();
                assert_eq!(enumerate_nc(&c), enumerate_nn(&c));
            }
        }
    }

    #[test]
    fn shapes() {
        assert_eq!(bounding_shape(&fig_ctx()).rows(), &[9, 7, 7, 6, 4, 4]);
        assert_eq!(bounding_shape(&j_regions(4, &[]).unwrap()).rows(), &[3, 2, 1]);
        assert!(bounding_shape(&j_regions(4, &[1, 2, 3]).unwrap()).rows().is_empty());
        assert_eq!(kreweras_count(&FerrersShape::new(vec![2, 1]).unwrap()), 5);
        assert_eq!(kreweras_count(&FerrersShape::new(vec![3, 2, 1]).unwrap()), 14);
        assert_eq!(kreweras_count(&FerrersShape::new(vec![]).unwrap()), 1);
        let s = bounding_shape(&fig_ctx());
        assert_eq!(kreweras_count(&s), parabolic_root_poset_a(&fig_ctx()).0.count_ideals());
        assert_eq!(kreweras_count(&s), s.count_subshapes());
    }

    #[test]
    fn three_families_agree_small() {
        for n in 1..=5 {
            for c in JContext::all_subsets(n) {
                let av = avoiding_elements(&c);
                let nc = enumerate_nc(&c);
                let nn = enumerate_nn(&c);
                assert_eq!(av.len(), nc.len(), "{n} {:?}", c.j_set());
                assert_eq!(nc.len(), nn.len(), "{n} {:?}", c.j_set());
                for p in &nn {
                    let q = nn_to_nc(p, &c).unwrap();
                    assert!(is_j_noncrossing(&q, &c));
                    assert_eq!(&nc_to_nn(&q, &c).unwrap(), p);
                }
                for w in &av {
                    assert_eq!(&nc_to_perm(&perm_to_nc(w, &c).unwrap(), &c).unwrap(), w);
                }
            }
        }
    }
}
