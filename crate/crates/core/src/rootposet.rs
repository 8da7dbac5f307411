//! Root posets on positive roots and their parabolic order filters.
//!
//! Crystallographic types use the coordinatewise order. For H3 and the
//! dihedral types the order is embedded data; other non-crystallographic
//! types need a user-supplied file in the following format:
//!
//! ```text
//! # comment lines start with '#'
//! roots: (1,0,0,0) (0,1,0,0) (1+1p,1,0,0) ...
//! roots: ...                      (several roots: lines concatenate)
//! 0 < 2                           (cover relations between 0-based root indices)
//! ```
//!
//! Coordinates are on the simple-root basis, written as ring literals
//! (`p` stands for the golden ratio, so `1+1p` is 1 + φ). Every positive
//! root must appear exactly once, and so every simple root is present.

use std::collections::HashMap;

use crate::coxeter::{CoxeterSystem, Root};
use crate::error::{Error, Result};
use crate::poset::FinitePoset;
use crate::ring::Ring;

/// A root poset together with the root carried by each element.
#[derive(Clone, Debug)]
pub struct RootPoset<R: Ring> {
    pub poset: FinitePoset,
    pub roots: Vec<Root<R>>,
}

const H3_ROOTS: &str = "(1,0,0) (0,1,0) (0,0,1) (p,1,0) (0,1,1) (p,1,1) (1,p,0) (p,1+1p,1) \
    (p,p,0) (1+1p,1+1p,1) (1,p,p) (p,p,p) (p,1+1p,p) (1+1p,1+1p,p) (1+1p,2p,p)";

const H3_COVERS: [(usize, usize); 18] = [
    (0, 3),
    (1, 3),
    (1, 4),
    (2, 4),
    (3, 5),
    (3, 6),
    (4, 5),
    (5, 7),
    (6, 7),
    (6, 8),
    (7, 9),
    (7, 10),
    (8, 9),
    (9, 11),
    (10, 11),
    (11, 12),
    (12, 13),
    (13, 14),
];

fn root_label<R: Ring>(r: &[R]) -> String {
    format!("({})", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn parse_roots<R: Ring>(text: &str) -> Result<Vec<Root<R>>> {
    let mut out = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body =
            rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected '(' in root list near {rest:?}")))?;
        let end = body.find(')').ok_or_else(|| Error::Parse("unclosed root".into()))?;
        let coords = body[..end].split(',').map(R::parse).collect::<Result<Vec<_>>>()?;
        out.push(coords);
        rest = body[end + 1..].trim_start();
    }
    Ok(out)
}

impl<R: Ring> RootPoset<R> {
    fn from_parts(sys: &CoxeterSystem<R>, roots: Vec<Root<R>>, covers: &[(usize, usize)]) -> Result<Self> {
        let positive = sys.positive_roots()?;
        if roots.len() != positive.len() {
            return Err(Error::NoRootPoset(format!(
                "{} roots given, {} has {} positive roots",
                roots.len(),
                sys.name(),
                positive.len()
            )));
        }
        let mut seen = HashMap::new();
        for (i, r) in roots.iter().enumerate() {
            if r.len() != sys.rank() || !positive.contains(r) {
                return Err(Error::NoRootPoset(format!("{} is not a positive root", root_label(r))));
            }
            if seen.insert(r.clone(), i).is_some() {
                return Err(Error::NoRootPoset(format!("{} listed twice", root_label(r))));
            }
        }
        if covers.iter().any(|&(a, b)| a >= roots.len() || b >= roots.len()) {
            return Err(Error::OutOfRange("cover index".into()));
        }
        let labels = roots.iter().map(|r| root_label(r)).collect();
        let poset = FinitePoset::from_covers(labels, covers)?;
        Ok(RootPoset { poset, roots })
    }

    /// Parses the documented file format against the given system.
    pub fn parse(sys: &CoxeterSystem<R>, text: &str) -> Result<Self> {
        let mut roots = Vec::new();
        let mut covers = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(list) = line.strip_prefix("roots:") {
                roots.extend(parse_roots::<R>(list)?);
            } else {
                let (a, b) =
                    line.split_once('<').ok_or_else(|| Error::Parse(format!("expected 'i < j', got {line:?}")))?;
                let a = a.trim().parse().map_err(|_| Error::Parse(line.into()))?;
                let b = b.trim().parse().map_err(|_| Error::Parse(line.into()))?;
                covers.push((a, b));
            }
        }
        Self::from_parts(sys, roots, &covers)
    }

    /// Serializes in the file format accepted by `parse`.
    pub fn to_file_format(&self) -> String {
        let mut s = String::from("roots:");
        for r in &self.roots {
            s.push(' ');
            s.push_str(&root_label(r));
        }
        s.push('\n');
        for &(a, b) in self.poset.covers() {
            s.push_str(&format!("{a} < {b}\n"));
        }
        s
    }

    pub fn simple_index(&self, s: usize) -> usize {
        self.roots
            .iter()
            .position(|r| r.iter().enumerate().all(|(k, x)| *x == if k == s { R::one() } else { R::zero() }))
            .expect("simple roots are present")
    }

    /// The order filter generated by the simple roots outside J.
    pub fn parabolic_filter(&self, rank: usize, j: &[usize]) -> FinitePoset {
        let gens: Vec<usize> = (0..rank).filter(|s| !j.contains(s)).map(|s| self.simple_index(s)).collect();
        self.poset.subposet(&self.poset.filter_elements(&gens))
    }

    pub fn nonnesting_count(&self, rank: usize, j: &[usize]) -> u128 {
        self.parabolic_filter(rank, j).count_ideals()
    }
}

fn is_crystallographic<R: Ring>(sys: &CoxeterSystem<R>) -> bool {
    (0..sys.rank()).all(|i| (0..sys.rank()).all(|j| sys.cartan(i, j).as_int().is_some()))
}

fn is_h3<R: Ring>(sys: &CoxeterSystem<R>) -> bool {
    sys.coxeter_matrix() == [vec![1, 5, 2], vec![5, 1, 3], vec![2, 3, 1]]
}

/// The root poset of a finite system: coordinatewise for crystallographic
/// types, embedded data for H3 and rank 2, otherwise an error.
pub fn root_poset<R: Ring>(sys: &CoxeterSystem<R>) -> Result<RootPoset<R>> {
    let positive = sys.positive_roots()?;
    if is_crystallographic(sys) {
        let labels = positive.iter().map(|r| root_label(r)).collect();
        let poset = FinitePoset::from_relation(labels, |a, b| {
            positive[a].iter().zip(&positive[b]).all(|(x, y)| !(*y - *x).is_negative())
        })?;
        return Ok(RootPoset { poset, roots: positive });
    }
    if sys.rank() == 2 {
        // two simple roots below a chain of the remaining roots, ordered by height
        let mut roots = positive;
        roots.sort_by(|a, b| {
            let h = |r: &Root<R>| r.iter().map(|x| x.to_f64()).sum::<f64>();
            h(a).total_cmp(&h(b))
        });
        let mut covers = Vec::new();
        if roots.len() > 2 {
            covers.extend([(0, 2), (1, 2)]);
            covers.extend((2..roots.len() - 1).map(|i| (i, i + 1)));
        }
        return RootPoset::from_parts(sys, roots, &covers);
    }
    if is_h3(sys) {
        return RootPoset::from_parts(sys, parse_roots(H3_ROOTS)?, &H3_COVERS);
    }
    Err(Error::NoRootPoset(format!("{} needs a root-poset file", sys.name())))
}
