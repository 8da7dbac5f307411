//! (J,231)/(J,132) patterns, the projections onto pattern-avoiding elements and
//! the parabolic Tamari lattice as a quotient of the weak order.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::perm::{
    descent_pairs, enumerate_quotient, inversion_set, require_member, weak_leq, weak_meet, JContext, Permutation,
};
use crate::poset::FinitePoset;

fn distinct_regions(ctx: &JContext, i: usize, j: usize, k: usize) -> bool {
    let (a, b, c) = (ctx.region_of(i), ctx.region_of(j), ctx.region_of(k));
    a != b && b != c && a != c
}

/// Lexicographically smallest (i,k) of a (J,231)-pattern (i,j,k), if any.
fn first_231(w: &Permutation, ctx: &JContext) -> Option<(usize, usize)> {
    for (i, k) in descent_pairs(w) {
        if (i + 1..k).any(|j| distinct_regions(ctx, i, j, k) && w.at(j) > w.at(i)) {
            return Some((i, k));
        }
    }
    None
}

/// Lexicographically smallest (i,k) of a (J,132)-pattern (i,j,k), if any.
fn first_132(w: &Permutation, ctx: &JContext) -> Option<(usize, usize)> {
    let inv = w.inverse();
    let mut pairs: Vec<(usize, usize)> = (1..w.n())
        .filter_map(|v| {
            let (i, k) = (inv.at(v), inv.at(v + 1));
            (i < k).then_some((i, k))
        })
        .collect();
    pairs.sort();
    for (i, k) in pairs {
        if (i + 1..k).any(|j| distinct_regions(ctx, i, j, k) && w.at(j) > w.at(k)) {
            return Some((i, k));
        }
    }
    None
}

pub fn has_j231_pattern(w: &Permutation, ctx: &JContext) -> Result<bool> {
    require_member(w, ctx)?;
    Ok(first_231(w, ctx).is_some())
}

pub fn has_j132_pattern(w: &Permutation, ctx: &JContext) -> Result<bool> {
    require_member(w, ctx)?;
    Ok(first_132(w, ctx).is_some())
}

pub fn is_j231_avoiding(w: &Permutation, ctx: &JContext) -> bool {
    crate::perm::is_quotient_member(w, ctx) && first_231(w, ctx).is_none()
}

/// Every descent (i,k) forces the inversion (i,j) for each region-distinct j between.
pub fn is_j_compressed(w: &Permutation, ctx: &JContext) -> Result<bool> {
    require_member(w, ctx)?;
    let inv = inversion_set(w);
    Ok(descent_pairs(w)
        .into_iter()
        .all(|(i, k)| (i + 1..k).all(|j| !distinct_regions(ctx, i, j, k) || inv.contains(i, j))))
}

pub fn pi_down(w: &Permutation, ctx: &JContext) -> Result<Permutation> {
    require_member(w, ctx)?;
    let mut cur = w.clone();
    while let Some((i, k)) = first_231(&cur, ctx) {
        cur = cur.swap_positions(i, k);
    }
    Ok(cur)
}

pub fn pi_up(w: &Permutation, ctx: &JContext) -> Result<Permutation> {
    require_member(w, ctx)?;
    let mut cur = w.clone();
    while let Some((i, k)) = first_132(&cur, ctx) {
        cur = cur.swap_positions(i, k);
    }
    Ok(cur)
}

pub fn avoiding_elements(ctx: &JContext) -> Vec<Permutation> {
    enumerate_quotient(ctx).into_iter().filter(|w| first_231(w, ctx).is_none()).collect()
}

pub struct TamariLattice {
    pub ctx: JContext,
    pub elements: Vec<Permutation>,
    pub poset: FinitePoset,
}

pub fn weak_order_poset(ctx: &JContext, elements: &[Permutation]) -> FinitePoset {
    let invs: Vec<_> = elements.iter().map(inversion_set).collect();
    let labels = elements.iter().map(|w| w.display_with(ctx)).collect();
    FinitePoset::from_relation(labels, |a, b| invs[a].is_subset(&invs[b]))
        .expect("inversion-set containment is a partial order")
}

pub fn tamari_lattice(ctx: &JContext) -> TamariLattice {
    let elements = avoiding_elements(ctx);
    let poset = weak_order_poset(ctx, &elements);
    TamariLattice { ctx: ctx.clone(), elements, poset }
}

pub fn tamari_meet(u: &Permutation, v: &Permutation, ctx: &JContext) -> Result<Permutation> {
    for w in [u, v] {
        require_member(w, ctx)?;
        if first_231(w, ctx).is_some() {
            return Err(Error::NotAvoiding);
        }
    }
    pi_down(&weak_meet(u, v)?, ctx)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceClass {
    pub bottom: Permutation,
    pub top: Permutation,
    pub members: Vec<Permutation>,
}

/// Fibers of pi_down, ordered by their bottom element.
pub fn congruence_classes(ctx: &JContext) -> Vec<CongruenceClass> {
    let mut groups: BTreeMap<Permutation, Vec<Permutation>> = BTreeMap::new();
    for w in enumerate_quotient(ctx) {
        let b = pi_down(&w, ctx).expect("member");
        groups.entry(b).or_default().push(w);
    }
    groups
        .into_iter()
        .map(|(bottom, members)| {
            let top = pi_up(&bottom, ctx).expect("member");
            CongruenceClass { bottom, top, members }
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
pub struct QuotientReport {
    pub elements: usize,
    pub classes: usize,
    pub classes_are_intervals: bool,
    pub down_order_preserving: bool,
    pub up_order_preserving: bool,
    pub quotient_isomorphic: bool,
    pub is_lattice: bool,
    pub witnesses: Vec<String>,
}

impl QuotientReport {
    pub fn passed(&self) -> bool {
        self.classes_are_intervals
            && self.down_order_preserving
            && self.up_order_preserving
            && self.quotient_isomorphic
            && self.is_lattice
    }
}

pub fn verify_quotient(ctx: &JContext) -> QuotientReport {
    let all = enumerate_quotient(ctx);
    let weak = weak_order_poset(ctx, &all);
    let index: BTreeMap<&Permutation, usize> = all.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let classes = congruence_classes(ctx);
    let mut report = QuotientReport {
        elements: all.len(),
        classes: classes.len(),
        classes_are_intervals: true,
        down_order_preserving: true,
        up_order_preserving: true,
        ..Default::default()
    };

    for class in &classes {
        let expected: Vec<&Permutation> = all
            .iter()
            .filter(|w| weak_leq(&class.bottom, w).unwrap_or(false) && weak_leq(w, &class.top).unwrap_or(false))
            .collect();
        let same = expected.len() == class.members.len() && expected.iter().all(|w| class.members.contains(w));
        if !same {
            report.classes_are_intervals = false;
            report.witnesses.push(format!(
                "class of {} is not [{}, {}]",
                class.bottom.display_with(ctx),
                class.bottom.display_with(ctx),
                class.top.display_with(ctx)
            ));
        }
    }

    let down: Vec<Permutation> = all.iter().map(|w| pi_down(w, ctx).expect("member")).collect();
    let up: Vec<Permutation> = all.iter().map(|w| pi_up(w, ctx).expect("member")).collect();
    for &(a, b) in weak.covers() {
        if !weak_leq(&down[a], &down[b]).unwrap_or(false) {
            report.down_order_preserving = false;
            report.witnesses.push(format!("pi_down reverses {} < {}", weak.label(a), weak.label(b)));
        }
        if !weak_leq(&up[a], &up[b]).unwrap_or(false) {
            report.up_order_preserving = false;
            report.witnesses.push(format!("pi_up reverses {} < {}", weak.label(a), weak.label(b)));
        }
    }

    let tam = tamari_lattice(ctx);
    report.is_lattice = tam.poset.is_lattice().is_lattice();
    let class_idx: Vec<Vec<usize>> = classes.iter().map(|c| c.members.iter().map(|m| index[m]).collect()).collect();
    match weak.quotient(&class_idx) {
        Ok(q) => report.quotient_isomorphic = q.is_isomorphic(&tam.poset),
        Err(e) => report.witnesses.push(e.to_string()),
    }
    report
}
