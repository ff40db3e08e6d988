//! The six Pell-family sequences, generated exactly from their recurrences.
//!
//! | kind                | recurrence                      | S₀ | S₁ |
//! |---------------------|---------------------------------|----|----|
//! | Pell `P`            | `S_n = 2S_{n−1} + S_{n−2}`      | 0  | 1  |
//! | associated Pell `Q` | `S_n = 2S_{n−1} + S_{n−2}`      | 1  | 1  |
//! | balancing `B`       | `S_n = 6S_{n−1} − S_{n−2}`      | 0  | 1  |
//! | Lucas-balancing `C` | `S_n = 6S_{n−1} − S_{n−2}`      | 1  | 3  |
//! | cobalancing `b`     | `S_n = 6S_{n−1} − S_{n−2} + 2`  | 0  | 0  |
//! | Lucas-cobalancing `c` | `S_n = 6S_{n−1} − S_{n−2}`    | −1 | 1  |
//!
//! Nothing here touches floating point. The Binet forms are checked through
//! [`QuadraticInt`], exact arithmetic in `ℤ[√2]`.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::Integer;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceKind {
    Pell,
    #[serde(rename = "qell")]
    AssociatedPell,
    Balancing,
    LucasBalancing,
    Cobalancing,
    LucasCobalancing,
}

/// Second-order linear recurrence with a constant drift:
/// `S_n = a·S_{n−1} + b·S_{n−2} + drift`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Recurrence {
    pub initial: [i64; 2],
    pub a: i64,
    pub b: i64,
    pub drift: i64,
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 6] = [
        SequenceKind::Pell,
        SequenceKind::AssociatedPell,
        SequenceKind::Balancing,
        SequenceKind::LucasBalancing,
        SequenceKind::Cobalancing,
        SequenceKind::LucasCobalancing,
    ];

    pub fn recurrence(self) -> Recurrence {
        use SequenceKind::*;
        let (initial, a, b, drift) = match self {
            Pell => ([0, 1], 2, 1, 0),
            AssociatedPell => ([1, 1], 2, 1, 0),
            Balancing => ([0, 1], 6, -1, 0),
            LucasBalancing => ([1, 3], 6, -1, 0),
            Cobalancing => ([0, 0], 6, -1, 2),
            LucasCobalancing => ([-1, 1], 6, -1, 0),
        };
        Recurrence {
            initial,
            a,
            b,
            drift,
        }
    }

    /// Name used on the command line and in JSON.
    pub fn name(self) -> &'static str {
        use SequenceKind::*;
        match self {
            Pell => "pell",
            AssociatedPell => "qell",
            Balancing => "balancing",
            LucasBalancing => "lucas-balancing",
            Cobalancing => "cobalancing",
            LucasCobalancing => "lucas-cobalancing",
        }
    }

    /// Conventional one-letter symbol (`P`, `Q`, `B`, `C`, `b`, `c`).
    pub fn symbol(self) -> &'static str {
        use SequenceKind::*;
        match self {
            Pell => "P",
            AssociatedPell => "Q",
            Balancing => "B",
            LucasBalancing => "C",
            Cobalancing => "b",
            LucasCobalancing => "c",
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseKindError(pub String);

impl fmt::Display for ParseKindError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown sequence kind `{}`", self.0)
    }
}

impl std::error::Error for ParseKindError {}

impl FromStr for SequenceKind {
    type Err = ParseKindError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SequenceKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| ParseKindError(s.to_owned()))
    }
}

/// The `n`-th term of `kind`.
pub fn term(kind: SequenceKind, n: usize) -> Integer {
    terms(kind, n, 1).pop().expect("one term requested")
}

/// `[S_start, …, S_{start+count−1}]`, computed in one linear pass from `S₀`.
pub fn terms(kind: SequenceKind, start: usize, count: usize) -> Vec<Integer> {
    if count == 0 {
        return Vec::new();
    }
    let rec = kind.recurrence();
    let a = BigInt::from(rec.a);
    let b = BigInt::from(rec.b);
    let drift = BigInt::from(rec.drift);
    let mut prev = BigInt::from(rec.initial[0]);
    let mut cur = BigInt::from(rec.initial[1]);
    let mut out = Vec::with_capacity(count);
    let end = start + count;
    for n in 0..end {
        if n >= start {
            out.push(prev.clone());
        }
        let next = &a * &cur + &b * &prev + &drift;
        prev = std::mem::replace(&mut cur, next);
    }
    out
}

/// Prefix `S_0 ..= S_{len−1}` of all six sequences, for sweeps that index
/// the same terms many times.
#[derive(Debug, Clone)]
pub struct SequenceTable {
    rows: [Vec<Integer>; 6],
}

impl SequenceTable {
    pub fn new(len: usize) -> Self {
        SequenceTable {
            rows: SequenceKind::ALL.map(|kind| terms(kind, 0, len)),
        }
    }

    pub fn len(&self) -> usize {
        self.rows[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Panics if `n` is outside the table.
    pub fn get(&self, kind: SequenceKind, n: usize) -> &Integer {
        let row = &self.rows[kind as usize];
        row.get(n)
            .unwrap_or_else(|| panic!("{kind} index {n} outside table of length {}", row.len()))
    }

    pub fn row(&self, kind: SequenceKind) -> &[Integer] {
        &self.rows[kind as usize]
    }

    pub fn p(&self, n: usize) -> &Integer {
        self.get(SequenceKind::Pell, n)
    }

    pub fn q(&self, n: usize) -> &Integer {
        self.get(SequenceKind::AssociatedPell, n)
    }
}

/// `a + b√2` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticInt {
    pub a: Integer,
    pub b: Integer,
}

impl QuadraticInt {
    pub fn new(a: impl Into<Integer>, b: impl Into<Integer>) -> Self {
        QuadraticInt {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn one() -> Self {
        QuadraticInt::new(1, 0)
    }

    /// `γ = 1 + √2`.
    pub fn gamma() -> Self {
        QuadraticInt::new(1, 1)
    }

    /// `a − b√2`; maps `γ` to `δ = 1 − √2`.
    pub fn conjugate(&self) -> Self {
        QuadraticInt {
            a: self.a.clone(),
            b: -&self.b,
        }
    }

    /// Field norm `a² − 2b²`.
    pub fn norm(&self) -> Integer {
        &self.a * &self.a - BigInt::from(2) * &self.b * &self.b
    }

    pub fn pow(&self, mut exp: usize) -> Self {
        let mut base = self.clone();
        let mut acc = QuadraticInt::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }
}

impl Mul for &QuadraticInt {
    type Output = QuadraticInt;

    fn mul(self, rhs: &QuadraticInt) -> QuadraticInt {
        QuadraticInt {
            a: &self.a * &rhs.a + BigInt::from(2) * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &rhs.a * &self.b,
        }
    }
}

impl Mul for QuadraticInt {
    type Output = QuadraticInt;

    fn mul(self, rhs: QuadraticInt) -> QuadraticInt {
        &self * &rhs
    }
}

/// `γⁿ` by square-and-multiply; equals `(Q_n, P_n)`.
pub fn gamma_power(n: usize) -> QuadraticInt {
    QuadraticInt::gamma().pow(n)
}
