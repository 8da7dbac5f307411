//! Coxeter systems in the geometric representation on the simple-root basis,
//! with exact coefficients. Elements are matrices with a cached reduced word.

use std::collections::{HashMap, HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::ring::{Frac, Golden, Ring};

/// Marker for m_ij = ∞.
pub const INF: u32 = 0;

pub type Root<R> = Vec<R>;

/// Cartan-like entry c_ij with s_i(α_j) = α_j − c_ij α_i, as a + bφ.
fn cartan_entry(m: u32, i: usize, j: usize) -> Option<(i64, i64)> {
    let lower = i < j;
    match m {
        1 => Some((2, 0)),
        2 => Some((0, 0)),
        3 => Some((-1, 0)),
        4 => Some(if lower { (-1, 0) } else { (-2, 0) }),
        6 => Some(if lower { (-1, 0) } else { (-3, 0) }),
        5 => Some((0, -1)),
        INF => Some((-2, 0)),
        _ => None,
    }
}

/// Rings that can host Cartan entries; integers reject the φ part.
pub trait CartanRing: Ring {
    fn from_golden(a: i64, b: i64) -> Option<Self>;
}

impl CartanRing for i64 {
    fn from_golden(a: i64, b: i64) -> Option<Self> {
        (b == 0).then_some(a)
    }
}

impl CartanRing for Golden {
    fn from_golden(a: i64, b: i64) -> Option<Self> {
        Some(Golden::new(a, b))
    }
}

#[derive(Clone, Debug)]
pub struct CoxeterSystem<R: Ring> {
    name: String,
    rank: usize,
    m: Vec<Vec<u32>>,
    cartan: Vec<R>,
    finite: bool,
    labels: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct GroupElement<R: Ring> {
    matrix: Vec<R>,
    word: Vec<usize>,
}

impl<R: Ring> PartialEq for GroupElement<R> {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl<R: Ring> Eq for GroupElement<R> {}

impl<R: Ring> Hash for GroupElement<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl<R: Ring> GroupElement<R> {
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn matrix(&self) -> &[R] {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

pub fn is_positive_root<R: Ring>(v: &[R]) -> bool {
    v.iter().all(|x| !x.is_negative()) && v.iter().any(|x| x.is_positive())
}

pub fn is_negative_root<R: Ring>(v: &[R]) -> bool {
    v.iter().all(|x| !x.is_positive()) && v.iter().any(|x| x.is_negative())
}

fn negate<R: Ring>(v: &[R]) -> Root<R> {
    v.iter().map(|&x| -x).collect()
}

/// Positive definiteness of the cosine form, by Cholesky in floating point.
fn cosine_form_definite(m: &[Vec<u32>]) -> bool {
    let n = m.len();
    let b = |i: usize, j: usize| -> f64 {
        match m[i][j] {
            1 => 1.0,
            INF => -1.0,
            k => -(std::f64::consts::PI / k as f64).cos(),
        }
    };
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = b(i, i) - s;
                if d <= 1e-12 {
                    return false;
                }
                l[i][i] = d.sqrt();
            } else {
                l[i][j] = (b(i, j) - s) / l[j][j];
            }
        }
    }
    true
}

impl<R: CartanRing> CoxeterSystem<R> {
    pub fn new(name: &str, m: Vec<Vec<u32>>, labels: Vec<String>) -> Result<Self> {
        let n = m.len();
        if labels.len() != n || m.iter().any(|row| row.len() != n) {
            return Err(Error::Unsupported("Coxeter matrix must be square".into()));
        }
        let mut cartan = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                if m[i][j] != m[j][i] || (i == j) != (m[i][j] == 1) {
                    return Err(Error::Unsupported(format!("invalid Coxeter matrix entry m{i}{j}")));
                }
                let (a, b) = cartan_entry(m[i][j], i, j)
                    .ok_or_else(|| Error::Unsupported(format!("m = {} needs a dihedral model", m[i][j])))?;
                let c = R::from_golden(a, b).ok_or_else(|| {
                    Error::Unsupported(format!("m = {} is not representable over the {}", m[i][j], R::NAME))
                })?;
                cartan.push(c);
            }
        }
        let finite = cosine_form_definite(&m);
        Ok(CoxeterSystem { name: name.to_string(), rank: n, m, cartan, finite, labels })
    }
}

impl<R: Ring> CoxeterSystem<R> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_finite(&self) -> bool {
        self.finite
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn cartan(&self, i: usize, j: usize) -> R {
        self.cartan[i * self.rank + j]
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|&s| self.labels[s].as_str()).collect::<Vec<_>>().join("")
    }

    /// Parses `s0 s1 s0`, `s0s1s0` or comma/space separated generator labels.
    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        let t: String = text.chars().filter(|c| !c.is_whitespace() && *c != ',').collect();
        if t.is_empty() || t == "e" {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for tok in t.split('s').skip(1) {
            let label = format!("s{tok}");
            let idx = self
                .labels
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| Error::Parse(format!("unknown generator {label} in {}", self.name)))?;
            out.push(idx);
        }
        if !t.starts_with('s') {
            return Err(Error::Parse(format!("word {text:?}")));
        }
        Ok(out)
    }

    pub fn simple_root(&self, i: usize) -> Root<R> {
        (0..self.rank).map(|k| if k == i { R::one() } else { R::zero() }).collect()
    }

    pub fn simple_reflection_matrix(&self, i: usize) -> Vec<R> {
        let n = self.rank;
        let mut mat = vec![R::zero(); n * n];
        for j in 0..n {
            mat[j * n + j] = R::one();
            mat[i * n + j] = mat[i * n + j] - self.cartan(i, j);
        }
        mat
    }

    pub fn reflect_simple(&self, i: usize, v: &[R]) -> Root<R> {
        let mut c = R::zero();
        for (j, &x) in v.iter().enumerate() {
            c = c + self.cartan(i, j) * x;
        }
        let mut out = v.to_vec();
        out[i] = out[i] - c;
        out
    }

    pub fn identity(&self) -> GroupElement<R> {
        let n = self.rank;
        let mut matrix = vec![R::zero(); n * n];
        for i in 0..n {
            matrix[i * n + i] = R::one();
        }
        GroupElement { matrix, word: Vec::new() }
    }

    pub fn generator(&self, i: usize) -> GroupElement<R> {
        GroupElement { matrix: self.simple_reflection_matrix(i), word: vec![i] }
    }

    pub fn apply(&self, w: &GroupElement<R>, v: &[R]) -> Root<R> {
        let n = self.rank;
        (0..n).map(|i| (0..n).fold(R::zero(), |acc, j| acc + w.matrix[i * n + j] * v[j])).collect()
    }

    /// w(α_j).
    pub fn column(&self, w: &GroupElement<R>, j: usize) -> Root<R> {
        let n = self.rank;
        (0..n).map(|i| w.matrix[i * n + j]).collect()
    }

    fn multiply_matrix_by_simple(&self, matrix: &[R], s: usize) -> Vec<R> {
        let n = self.rank;
        let mut out = matrix.to_vec();
        for i in 0..n {
            let ws = matrix[i * n + s];
            for j in 0..n {
                out[i * n + j] = if j == s { -ws } else { matrix[i * n + j] - self.cartan(s, j) * ws };
            }
        }
        out
    }

    /// w·s, keeping the cached word reduced (append on ascent, exchange on descent).
    pub fn mul_simple(&self, w: &GroupElement<R>, s: usize) -> GroupElement<R> {
        let col = self.column(w, s);
        let matrix = self.multiply_matrix_by_simple(&w.matrix, s);
        let mut word = w.word.clone();
        if is_positive_root(&col) {
            word.push(s);
        } else {
            let target = negate(&col);
            let seq = self.inversion_sequence_unchecked(&w.word);
            let pos = seq.iter().position(|r| *r == target).expect("descent root appears in the inversion sequence");
            word.remove(pos);
        }
        GroupElement { matrix, word }
    }

    /// Ascent-only right multiplication; the caller guarantees w(α_s) > 0.
    fn mul_ascent(&self, w: &GroupElement<R>, s: usize) -> GroupElement<R> {
        let matrix = self.multiply_matrix_by_simple(&w.matrix, s);
        let mut word = w.word.clone();
        word.push(s);
        GroupElement { matrix, word }
    }

    pub fn element(&self, word: &[usize]) -> GroupElement<R> {
        word.iter().fold(self.identity(), |acc, &s| self.mul_simple(&acc, s))
    }

    pub fn multiply(&self, u: &GroupElement<R>, v: &GroupElement<R>) -> GroupElement<R> {
        v.word.iter().fold(u.clone(), |acc, &s| self.mul_simple(&acc, s))
    }

    pub fn inverse(&self, w: &GroupElement<R>) -> GroupElement<R> {
        let rev: Vec<usize> = w.word.iter().rev().copied().collect();
        let mut out = self.identity();
        for &s in &rev {
            out = self.mul_ascent(&out, s);
        }
        out
    }

    /// Matrix of a product of elements, ignoring words.
    pub fn matrix_product(&self, a: &[R], b: &[R]) -> Vec<R> {
        let n = self.rank;
        let mut out = vec![R::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = out[i * n + j] + x * b[k * n + j];
                }
            }
        }
        out
    }

    fn inversion_sequence_unchecked(&self, word: &[usize]) -> Vec<Root<R>> {
        let mut prefix = self.identity().matrix;
        let mut out = Vec::with_capacity(word.len());
        let n = self.rank;
        for &a in word {
            out.push((0..n).map(|i| prefix[i * n + a]).collect());
            prefix = self.multiply_matrix_by_simple(&prefix, a);
        }
        out
    }

    /// r_i = a_1 ⋯ a_{i−1}(α_{a_i}); fails on non-reduced words.
    pub fn inversion_sequence(&self, word: &[usize]) -> Result<Vec<Root<R>>> {
        let seq = self.inversion_sequence_unchecked(word);
        if seq.iter().all(|r| is_positive_root(r)) {
            Ok(seq)
        } else {
            Err(Error::NotReduced)
        }
    }

    pub fn is_reduced(&self, word: &[usize]) -> bool {
        self.inversion_sequence(word).is_ok()
    }

    /// {β > 0 : w⁻¹(β) < 0}, listed in the inversion order of the cached word.
    pub fn left_inversion_set(&self, w: &GroupElement<R>) -> Vec<Root<R>> {
        self.inversion_sequence_unchecked(&w.word)
    }

    pub fn right_descents(&self, w: &GroupElement<R>) -> Vec<usize> {
        (0..self.rank).filter(|&s| is_negative_root(&self.column(w, s))).collect()
    }

    /// Roots of w s w⁻¹ over the right descents s of w.
    pub fn cover_reflections(&self, w: &GroupElement<R>) -> Vec<Root<R>> {
        self.right_descents(w).into_iter().map(|s| negate(&self.column(w, s))).collect()
    }

    /// The reflection w s w⁻¹ as a matrix.
    pub fn conjugate_matrix(&self, w: &GroupElement<R>, s: usize) -> Vec<R> {
        let ws = self.multiply_matrix_by_simple(&w.matrix, s);
        let winv = self.inverse(w);
        self.matrix_product(&ws, &winv.matrix)
    }

    /// Recovers a reduced word for a group matrix by stripping right descents.
    pub fn element_from_matrix(&self, matrix: Vec<R>) -> GroupElement<R> {
        let mut cur = GroupElement { matrix: matrix.clone(), word: Vec::new() };
        let mut rev = Vec::new();
        while let Some(s) = (0..self.rank).find(|&s| is_negative_root(&self.column(&cur, s))) {
            rev.push(s);
            cur.matrix = self.multiply_matrix_by_simple(&cur.matrix, s);
        }
        rev.reverse();
        GroupElement { matrix, word: rev }
    }

    /// Parses a generator set such as `1,2`, `s1 s2` or the empty string.
    pub fn parse_generator_set(&self, text: &str) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let label = if tok.starts_with('s') { tok.to_string() } else { format!("s{tok}") };
            let idx = self
                .labels
                .iter()
                .position(|l| *l == label)
                .ok_or_else(|| Error::InvalidJ(format!("unknown generator {tok}")))?;
            if !out.contains(&idx) {
                out.push(idx);
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Leftmost reduced subword of c^∞ representing w.
    pub fn c_sorting_word(&self, w: &GroupElement<R>, c: &[usize]) -> Result<Vec<usize>> {
        let mut sorted_c = c.to_vec();
        sorted_c.sort_unstable();
        if sorted_c != (0..self.rank).collect::<Vec<_>>() {
            return Err(Error::Unsupported("c must use every generator once".into()));
        }
        let mut z = self.inverse(w);
        let mut out = Vec::with_capacity(w.length());
        while !z.is_identity() {
            let before = out.len();
            for &s in c {
                if is_negative_root(&self.column(&z, s)) {
                    out.push(s);
                    z = self.mul_simple(&z, s);
                }
            }
            if out.len() == before {
                return Err(Error::Unsupported("sorting did not progress".into()));
            }
        }
        Ok(out)
    }

    pub fn longest_element(&self) -> Result<GroupElement<R>> {
        if !self.finite {
            return Err(Error::Infinite);
        }
        let mut w = self.identity();
        while let Some(s) = (0..self.rank).find(|&s| is_positive_root(&self.column(&w, s))) {
            w = self.mul_ascent(&w, s);
        }
        Ok(w)
    }

    pub fn quotient_min_rep(&self, w: &GroupElement<R>, j: &[usize]) -> GroupElement<R> {
        let mut w = w.clone();
        while let Some(&s) = j.iter().find(|&&s| is_negative_root(&self.column(&w, s))) {
            w = self.mul_simple(&w, s);
        }
        w
    }

    /// w_o^J.
    pub fn quotient_longest(&self, j: &[usize]) -> Result<GroupElement<R>> {
        Ok(self.quotient_min_rep(&self.longest_element()?, j))
    }

    pub fn weak_interval(&self, w: &GroupElement<R>) -> WeakInterval<R> {
        WeakInterval::new(self, w)
    }

    pub fn enumerate_weak_interval(&self, w: &GroupElement<R>) -> Vec<GroupElement<R>> {
        self.weak_interval(w).elements
    }

    pub fn enumerate_parabolic_quotient(&self, j: &[usize]) -> Result<Vec<GroupElement<R>>> {
        Ok(self.enumerate_weak_interval(&self.quotient_longest(j)?))
    }

    pub fn positive_roots(&self) -> Result<Vec<Root<R>>> {
        if !self.finite {
            return Err(Error::Infinite);
        }
        let mut seen: HashSet<Root<R>> = HashSet::new();
        let mut out = Vec::new();
        let mut queue: VecDeque<Root<R>> = (0..self.rank).map(|i| self.simple_root(i)).collect();
        for r in &queue {
            seen.insert(r.clone());
        }
        while let Some(r) = queue.pop_front() {
            for s in 0..self.rank {
                let t = self.reflect_simple(s, &r);
                if is_positive_root(&t) && seen.insert(t.clone()) {
                    queue.push_back(t);
                }
            }
            out.push(r);
        }
        Ok(out)
    }

    /// γ = aα + bβ with a, b > 0 in the fraction field, if such a solution exists.
    pub fn solve_two_root_combination(
        &self,
        gamma: &[R],
        alpha: &[R],
        beta: &[R],
    ) -> Result<Option<(Frac<R>, Frac<R>)>> {
        let n = self.rank;
        let mut pivot = None;
        'outer: for i in 0..n {
            for j in i + 1..n {
                let det = alpha[i] * beta[j] - alpha[j] * beta[i];
                if !det.is_zero() {
                    pivot = Some((i, j, det));
                    break 'outer;
                }
            }
        }
        let Some((i, j, det)) = pivot else {
            return Err(Error::Dependent);
        };
        let a = gamma[i] * beta[j] - gamma[j] * beta[i];
        let b = alpha[i] * gamma[j] - alpha[j] * gamma[i];
        let consistent = (0..n).all(|k| gamma[k] * det == a * alpha[k] + b * beta[k]);
        if !consistent {
            return Ok(None);
        }
        let (a, b) = (Frac::new(a, det), Frac::new(b, det));
        Ok((a.is_positive() && b.is_positive()).then_some((a, b)))
    }

    /// One word per Coxeter element (lexicographically first generator ordering).
    pub fn coxeter_elements(&self) -> Vec<Vec<usize>> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..self.rank).collect();
        loop {
            let e = self.element(&perm);
            if seen.insert(e.matrix.clone()) {
                out.push(perm.clone());
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        out
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).expect("exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// The lower weak-order interval [e, w], with inversion sets as bit masks over
/// the inversion order of w's cached word.
#[derive(Clone, Debug)]
pub struct WeakInterval<R: Ring> {
    pub top: GroupElement<R>,
    pub roots: Vec<Root<R>>,
    pub index: HashMap<Root<R>, usize>,
    pub elements: Vec<GroupElement<R>>,
    pub masks: Vec<u128>,
    pub position: HashMap<u128, usize>,
}

impl<R: Ring> WeakInterval<R> {
    fn new(sys: &CoxeterSystem<R>, w: &GroupElement<R>) -> Self {
        assert!(w.length() <= 128, "inversion masks hold at most 128 roots");
        let roots = sys.left_inversion_set(w);
        let index: HashMap<Root<R>, usize> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut elements = vec![sys.identity()];
        let mut masks = vec![0u128];
        let mut position = HashMap::from([(0u128, 0usize)]);
        let mut head = 0;
        while head < elements.len() {
            let x = elements[head].clone();
            let mask = masks[head];
            head += 1;
            for s in 0..sys.rank() {
                let col = sys.column(&x, s);
                if !is_positive_root(&col) {
                    continue;
                }
                let Some(&bit) = index.get(&col) else {
                    continue;
                };
                let next = mask | 1u128 << bit;
                if position.contains_key(&next) {
                    continue;
                }
                position.insert(next, elements.len());
                elements.push(sys.mul_ascent(&x, s));
                masks.push(next);
            }
        }
        WeakInterval { top: w.clone(), roots, index, elements, masks, position }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Inversion mask of an arbitrary element, if it lies in the interval.
    pub fn mask_of(&self, sys: &CoxeterSystem<R>, x: &GroupElement<R>) -> Option<u128> {
        let mut mask = 0u128;
        for r in sys.left_inversion_set(x) {
            mask |= 1u128 << self.index.get(&r)?;
        }
        Some(mask)
    }
}

/// A system over either coefficient ring, chosen by the Coxeter matrix.
#[derive(Clone, Debug)]
pub enum AnySystem {
    Int(CoxeterSystem<i64>),
    Golden(CoxeterSystem<Golden>),
}

#[macro_export]
macro_rules! with_system {
    ($any:expr, $s:ident => $body:expr) => {
        match $any {
            $crate::coxeter::AnySystem::Int($s) => $body,
            $crate::coxeter::AnySystem::Golden($s) => $body,
        }
    };
}

impl AnySystem {
    pub fn from_matrix(name: &str, m: Vec<Vec<u32>>, labels: Vec<String>) -> Result<Self> {
        if m.iter().flatten().any(|&x| x == 5) {
            Ok(AnySystem::Golden(CoxeterSystem::new(name, m, labels)?))
        } else {
            Ok(AnySystem::Int(CoxeterSystem::new(name, m, labels)?))
        }
    }

    pub fn name(&self) -> &str {
        with_system!(self, s => s.name())
    }

    pub fn rank(&self) -> usize {
        with_system!(self, s => s.rank())
    }

    pub fn ring_name(&self) -> &'static str {
        match self {
            AnySystem::Int(_) => i64::NAME,
            AnySystem::Golden(_) => Golden::NAME,
        }
    }

    pub fn parse_word(&self, text: &str) -> Result<Vec<usize>> {
        with_system!(self, s => s.parse_word(text))
    }

    pub fn word_string(&self, word: &[usize]) -> String {
        with_system!(self, s => s.word_string(word))
    }
}

fn linear(n: usize, edge: impl Fn(usize) -> u32) -> Vec<Vec<u32>> {
    let mut m = vec![vec![2u32; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for i in 0..n.saturating_sub(1) {
        let e = edge(i);
        m[i][i + 1] = e;
        m[i + 1][i] = e;
    }
    m
}

fn one_based(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("s{i}")).collect()
}

/// Coxeter matrices for the named types; `A4`, `B4`, `D4`, `F4`, `H3`, `H4`,
/// `E6`..`E8`, `I2` (with m), and `affine-A` of rank r (generators s0..sr).
pub fn coxeter_matrix(kind: &str, rank: usize, m: Option<u32>) -> Result<(String, Vec<Vec<u32>>, Vec<String>)> {
    let bad = || Error::Unsupported(format!("type {kind} of rank {rank}"));
    let k = kind.to_ascii_uppercase();
    let (mat, labels, name) = match k.as_str() {
        "A" if rank >= 1 => (linear(rank, |_| 3), one_based(rank), format!("A{rank}")),
        "B" | "C" if rank >= 2 => {
            (linear(rank, |i| if i + 2 == rank { 4 } else { 3 }), one_based(rank), format!("{k}{rank}"))
        }
        "D" if rank >= 4 => {
            let mut mat = linear(rank - 1, |_| 3);
            for row in mat.iter_mut() {
                row.push(2);
            }
            mat.push(vec![2; rank]);
            mat[rank - 1][rank - 1] = 1;
            mat[rank - 3][rank - 1] = 3;
            mat[rank - 1][rank - 3] = 3;
            (mat, one_based(rank), format!("D{rank}"))
        }
        "E" if (6..=8).contains(&rank) => {
            let mut mat = vec![vec![2u32; rank]; rank];
            for (i, row) in mat.iter_mut().enumerate() {
                row[i] = 1;
            }
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            edges.extend((3..rank - 1).map(|i| (i, i + 1)));
            for (a, b) in edges {
                mat[a][b] = 3;
                mat[b][a] = 3;
            }
            (mat, one_based(rank), format!("E{rank}"))
        }
        "F" if rank == 4 => (linear(4, |i| if i == 1 { 4 } else { 3 }), one_based(4), "F4".into()),
        "G" if rank == 2 => (linear(2, |_| 6), one_based(2), "G2".into()),
        "H" if rank == 3 || rank == 4 => {
            (linear(rank, |i| if i == 0 { 5 } else { 3 }), one_based(rank), format!("H{rank}"))
        }
        "I" if rank == 2 => {
            let m = m.ok_or_else(|| Error::Unsupported("type I needs --m".into()))?;
            if m < 2 {
                return Err(bad());
            }
            (linear(2, |_| m), one_based(2), format!("I2({m})"))
        }
        "AFFINE-A" | "IAFFINE-A" if rank >= 2 => {
            let n = rank + 1;
            let mut mat = vec![vec![2u32; n]; n];
            for i in 0..n {
                mat[i][i] = 1;
                let j = (i + 1) % n;
                let e = if n == 2 { INF } else { 3 };
                mat[i][j] = e;
                mat[j][i] = e;
            }
            let labels = (0..n).map(|i| format!("s{i}")).collect();
            (mat, labels, format!("affine-A{rank}"))
        }
        _ => return Err(bad()),
    };
    Ok((name, mat, labels))
}

pub fn build_system(kind: &str, rank: usize, m: Option<u32>) -> Result<AnySystem> {
    let (name, mat, labels) = coxeter_matrix(kind, rank, m)?;
    AnySystem::from_matrix(&name, mat, labels)
}

/// `A4`, `H3`, `affine-A3`, ...
pub fn parse_type_name(text: &str) -> Result<(String, usize)> {
    let t = text.trim();
    let split = t.rfind(|c: char| !c.is_ascii_digit()).map(|i| i + 1).unwrap_or(0);
    let (kind, digits) = t.split_at(split);
    let rank = digits.parse().map_err(|_| Error::Parse(format!("type name {text:?}")))?;
    Ok((kind.to_string(), rank))
}
