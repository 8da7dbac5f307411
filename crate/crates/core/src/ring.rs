//! Exact coefficient rings: the integers and the golden integers Z[φ], φ² = φ + 1.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};

pub trait Ring:
    Clone
    + Copy
    + PartialEq
    + Eq
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const NAME: &'static str;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(k: i64) -> Self;
    fn signum(&self) -> Ordering;
    fn to_f64(&self) -> f64;
    /// Exact quotient when it exists in the ring.
    fn exact_div(&self, d: &Self) -> Option<Self>;
    /// The value as a rational integer, if it is one.
    fn as_int(&self) -> Option<i64>;
    fn parse(s: &str) -> Result<Self>;

    fn is_zero(&self) -> bool {
        self.signum() == Ordering::Equal
    }
    fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }
    fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }
}

impl Ring for i64 {
    const NAME: &'static str = "integer";

    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_int(k: i64) -> Self {
        k
    }
    fn signum(&self) -> Ordering {
        self.cmp(&0)
    }
    fn to_f64(&self) -> f64 {
        *self as f64
    }
    fn exact_div(&self, d: &Self) -> Option<Self> {
        (*d != 0 && self % d == 0).then(|| self / d)
    }
    fn as_int(&self) -> Option<i64> {
        Some(*self)
    }
    fn parse(s: &str) -> Result<Self> {
        s.trim().parse().map_err(|_| Error::Parse(format!("integer literal {s:?}")))
    }
}

/// a + bφ
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Golden {
    pub a: i64,
    pub b: i64,
}

pub const PHI: Golden = Golden { a: 0, b: 1 };

impl Golden {
    pub const fn new(a: i64, b: i64) -> Self {
        Golden { a, b }
    }

    /// Galois conjugate a + b(1 − φ).
    pub fn conjugate(&self) -> Self {
        Golden { a: self.a + self.b, b: -self.b }
    }

    /// Field norm x·x̄ = a² + ab − b².
    pub fn norm(&self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, o: Golden) -> Golden {
        Golden { a: self.a + o.a, b: self.b + o.b }
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, o: Golden) -> Golden {
        Golden { a: self.a - o.a, b: self.b - o.b }
    }
}

impl Mul for Golden {
    type Output = Golden;
    fn mul(self, o: Golden) -> Golden {
        let bd = self.b * o.b;
        Golden { a: self.a * o.a + bd, b: self.a * o.b + self.b * o.a + bd }
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden { a: -self.a, b: -self.b }
    }
}

impl Ring for Golden {
    const NAME: &'static str = "Z[phi]";

    fn zero() -> Self {
        Golden::new(0, 0)
    }
    fn one() -> Self {
        Golden::new(1, 0)
    }
    fn from_int(k: i64) -> Self {
        Golden::new(k, 0)
    }

    /// a + bφ = ((2a + b) + b√5)/2, so compare (2a+b)² with 5b² when the signs differ.
    fn signum(&self) -> Ordering {
        let p = 2 * self.a + self.b;
        let q = self.b;
        match (p.signum(), q.signum()) {
            (0, s) | (s, 0) => s.cmp(&0),
            (1, 1) => Ordering::Greater,
            (-1, -1) => Ordering::Less,
            (sp, _) => {
                let (p2, q2) = ((p as i128) * (p as i128), 5 * (q as i128) * (q as i128));
                // p² vs 5q²: the larger magnitude decides the sign
                match p2.cmp(&q2) {
                    Ordering::Greater => sp.cmp(&0),
                    Ordering::Less => (-sp).cmp(&0),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    fn to_f64(&self) -> f64 {
        self.a as f64 + self.b as f64 * (1.0 + 5f64.sqrt()) / 2.0
    }

    fn exact_div(&self, d: &Self) -> Option<Self> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let num = *self * d.conjugate();
        (num.a % n == 0 && num.b % n == 0).then(|| Golden::new(num.a / n, num.b / n))
    }

    fn as_int(&self) -> Option<i64> {
        (self.b == 0).then_some(self.a)
    }

    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl FromStr for Golden {
    type Err = Error;

    /// Literals like `1`, `-2`, `1p`, `-p`, `1+1p`, `2-3p` (p stands for φ).
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse(format!("golden literal {s:?}"));
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, c) in t.char_indices() {
            if (c == '+' || c == '-') && i > 0 {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = Golden::zero();
        for term in terms {
            let term = term.strip_prefix('+').unwrap_or(term);
            if let Some(coef) = term.strip_suffix('p') {
                let k = match coef {
                    "" => 1,
                    "-" => -1,
                    c => c.parse().map_err(|_| err())?,
                };
                out.b += k;
            } else {
                out.a += term.parse::<i64>().map_err(|_| err())?;
            }
        }
        Ok(out)
    }
}

impl Display for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}p"),
            (a, b) if b > 0 => write!(f, "{a}+{b}p"),
            (a, b) => write!(f, "{a}{b}p"),
        }
    }
}

impl Debug for Golden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element num/den of the fraction field, den > 0.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Frac<R: Ring> {
    pub num: R,
    pub den: R,
}

impl<R: Ring> Frac<R> {
    pub fn new(num: R, den: R) -> Self {
        if den.is_negative() {
            Frac { num: -num, den: -den }
        } else {
            Frac { num, den }
        }
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    /// Exact ring value, if the fraction reduces to one.
    pub fn value(&self) -> Option<R> {
        self.num.exact_div(&self.den)
    }

    pub fn as_positive_int(&self) -> Option<i64> {
        self.value().and_then(|v| v.as_int()).filter(|&k| k > 0)
    }

    pub fn to_f64(&self) -> f64 {
        self.num.to_f64() / self.den.to_f64()
    }
}

impl<R: Ring> Display for Frac<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "({})/({})", self.num, self.den),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn golden_arithmetic() {
        assert_eq!(PHI * PHI, PHI + Golden::one());
        assert_eq!("1+1p".parse::<Golden>().unwrap(), Golden::new(1, 1));
        assert_eq!("-p".parse::<Golden>().unwrap(), Golden::new(0, -1));
        assert_eq!("2-3p".parse::<Golden>().unwrap(), Golden::new(2, -3));
        assert_eq!(Golden::new(2, -3).to_string(), "2-3p");
        assert!("x".parse::<Golden>().is_err());
    }

    #[test]
    fn golden_signs() {
        assert!(PHI.is_positive());
        assert!(Golden::new(2, -1).is_positive()); // 2 - φ ≈ 0.38
        assert!(Golden::new(1, -1).is_negative()); // 1 - φ ≈ -0.62
        assert!(Golden::new(-1, 1).is_positive()); // φ - 1 ≈ 0.62
        assert!(Golden::new(-2, 1).is_negative());
        assert!(Golden::zero().is_zero());
    }

    #[test]
    fn golden_division() {
        let phi_inv = Golden::one().exact_div(&PHI).unwrap();
        assert_eq!(phi_inv, Golden::new(-1, 1));
        assert_eq!(Golden::new(1, 0).exact_div(&Golden::new(2, 0)), None);
        assert_eq!(Frac::new(PHI, Golden::from_int(-1)).num, -PHI);
    }

    proptest! {
        #[test]
        fn sign_matches_float(a in -500i64..500, b in -500i64..500) {
            let g = Golden::new(a, b);
            let f = g.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(g.is_positive(), f > 0.0);
            } else {
                prop_assert!(g.is_zero());
            }
        }

        #[test]
        fn division_inverts_multiplication(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50) {
            let x = Golden::new(a, b);
            let y = Golden::new(c, d);
            prop_assume!(!y.is_zero());
            prop_assert_eq!((x * y).exact_div(&y), Some(x));
        }
    }
}
