//! Closed forms for the GCD of all sums of `k` consecutive terms (the "curl"
//! values `𝒮(k)`), and for sums of squares where one is known.
//!
//! Every function here is a pure formula evaluator over sequence terms. None
//! of them consult the oracle; agreement with the oracle is established in
//! tests and by [`gcd_report`].

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{exact_div, gcd};
use crate::error::{Error, Result};
use crate::oracle::curl_oracle;
use crate::sequences::{SequenceKind, SequenceTable};
use crate::Integer;

use SequenceKind::*;

/// GCD of all sums of `k` consecutive `m`-th powers of `kind`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurlQuery {
    pub kind: SequenceKind,
    pub k: usize,
    pub m: u32,
}

impl CurlQuery {
    pub fn new(kind: SequenceKind, k: usize, m: u32) -> Self {
        CurlQuery { kind, k, m }
    }

    /// Whether [`curl_closed`] has a formula for this query.
    pub fn has_closed_form(&self) -> bool {
        self.k >= 1
            && match self.m {
                1 => true,
                2 => matches!(self.kind, Pell | AssociatedPell),
                _ => false,
            }
    }
}

impl fmt::Display for CurlQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={}, m={})", self.kind, self.k, self.m)
    }
}

/// Which base sequence a closed form draws its value from at a given `k`.
/// Drives the braid picture in the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurlSource {
    Pell(usize),
    AssociatedPell(usize),
    One,
}

pub fn curl_closed(q: CurlQuery) -> Result<Integer> {
    if !q.has_closed_form() {
        if q.k == 0 {
            return Err(Error::Domain("k must be at least 1".into()));
        }
        return Err(Error::UnsupportedQuery {
            kind: q.kind,
            m: q.m,
        });
    }
    curl_closed_in(&SequenceTable::new(q.k + 1), q)
}

pub(crate) fn curl_closed_in(t: &SequenceTable, q: CurlQuery) -> Result<Integer> {
    let k = q.k;
    let even = k % 2 == 0;
    let h = k / 2;
    let one = || BigInt::from(1);
    let value = match (q.m, q.kind) {
        (1, Pell) => match k % 4 {
            0 => t.p(h) * 2u32,
            2 => t.q(h).clone(),
            _ => one(),
        },
        (1, AssociatedPell) => match k % 4 {
            0 => t.p(h) * 2u32,
            2 => t.q(h) * 2u32,
            _ => one(),
        },
        (1, Balancing) if even => exact_div(t.p(k).clone(), 2, "P_k/2")?,
        (1, Balancing) => t.q(k).clone(),
        (1, LucasBalancing) if even => t.p(k) * 2u32,
        (1, LucasBalancing) => t.q(k).clone(),
        (1, LucasCobalancing) if even => t.p(k) * 4u32,
        (1, LucasCobalancing) => t.q(k).clone(),
        (1, Cobalancing) if even => gcd(t.p(k), &BigInt::from(k)),
        (1, Cobalancing) => gcd(t.q(k), &BigInt::from(k)) * 2u32,
        (2, Pell) if even => exact_div(t.p(k).clone(), 2, "P_k/2")?,
        (2, AssociatedPell) if even => t.p(k).clone(),
        (2, Pell | AssociatedPell) => one(),
        (m, kind) => return Err(Error::UnsupportedQuery { kind, m }),
    };
    Ok(value)
}

/// The base sequence and index the closed form for `q` is built from.
pub fn curl_source(q: CurlQuery) -> Result<CurlSource> {
    if !q.has_closed_form() {
        return Err(Error::UnsupportedQuery {
            kind: q.kind,
            m: q.m,
        });
    }
    let k = q.k;
    let even = k % 2 == 0;
    Ok(match (q.m, q.kind) {
        (1, Pell | AssociatedPell) => match k % 4 {
            0 => CurlSource::Pell(k / 2),
            2 => CurlSource::AssociatedPell(k / 2),
            _ => CurlSource::One,
        },
        (2, _) if !even => CurlSource::One,
        (2, _) => CurlSource::Pell(k),
        (_, _) if even => CurlSource::Pell(k),
        (_, _) => CurlSource::AssociatedPell(k),
    })
}

/// Two-stage cobalancing form: `gcd(½(B_k − k), P_k)` for even `k`,
/// `gcd(½(B_k − k), 2Q_k)` for odd `k`. The halving is checked, not assumed.
pub fn curl_b_intermediary(k: usize) -> Result<Integer> {
    if k == 0 {
        return Err(Error::Domain("k must be at least 1".into()));
    }
    curl_b_intermediary_in(&SequenceTable::new(k + 1), k)
}

pub(crate) fn curl_b_intermediary_in(t: &SequenceTable, k: usize) -> Result<Integer> {
    let half = exact_div(t.get(Balancing, k) - BigInt::from(k), 2, "(B_k - k)/2")?;
    Ok(if k % 2 == 0 {
        gcd(&half, t.p(k))
    } else {
        gcd(&half, &(t.q(k) * 2u32))
    })
}

// ---------------------------------------------------------------------------
// Observed relations among squared-sum curls

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Observation {
    /// `ℬ²(k) = ½𝒞²(k)` for even `k`, `ℬ²(k) = 𝒞²(k)` for odd `k`.
    #[serde(rename = "B_vs_C")]
    BVsC,
    /// `𝒞²(k) = ⅓𝔠²(k)` for `k ≡ 3 (mod 6)`, `𝒞²(k) = 𝔠²(k)` otherwise.
    #[serde(rename = "C_vs_c")]
    CVsLowerC,
    /// `4 | 𝔟²(k)`.
    #[serde(rename = "b_mod4")]
    BMod4,
}

impl Observation {
    pub const ALL: [Observation; 3] = [
        Observation::BVsC,
        Observation::CVsLowerC,
        Observation::BMod4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Observation::BVsC => "B_vs_C",
            Observation::CVsLowerC => "C_vs_c",
            Observation::BMod4 => "b_mod4",
        }
    }
}

/// Verdict for one observation at one `k`.
///
/// * `B_vs_C`: `left = ℬ²(k)`, `right = 𝒞²(k)`, `factor` = 2 (even k) or 1.
/// * `C_vs_c`: `left = 𝒞²(k)`, `right = 𝔠²(k)`, `factor` = 3 (k ≡ 3 mod 6) or 1.
///   The relation tested is `left · factor = right`, with `right` required
///   to be divisible by `factor`.
/// * `b_mod4`: `left = 𝔟²(k)`, `right = 𝔟²(k) mod 4`, `factor` = 4.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObservationOutcome {
    pub observation: Observation,
    pub k: usize,
    pub horizon: usize,
    pub holds: bool,
    #[serde(with = "crate::decimal")]
    pub left: Integer,
    #[serde(with = "crate::decimal")]
    pub right: Integer,
    #[serde(with = "crate::decimal")]
    pub factor: Integer,
}

/// Tests one observed relation at `k` using oracle values at `horizon`.
/// A failed exact division is reported as `holds = false`, never as an error.
pub fn observation_check(which: Observation, k: usize, horizon: usize) -> ObservationOutcome {
    let sq = |kind| curl_oracle(kind, k, 2, horizon).value;
    let (left, right, factor, holds) = match which {
        Observation::BVsC => {
            let (b, c) = (sq(Balancing), sq(LucasBalancing));
            let factor = if k % 2 == 0 { 2 } else { 1 };
            let holds = divides_into(&c, factor, &b);
            (b, c, factor, holds)
        }
        Observation::CVsLowerC => {
            let (c, lc) = (sq(LucasBalancing), sq(LucasCobalancing));
            let factor = if k % 6 == 3 { 3 } else { 1 };
            let holds = divides_into(&lc, factor, &c);
            (c, lc, factor, holds)
        }
        Observation::BMod4 => {
            let b = sq(Cobalancing);
            let rem = b.mod_floor(&BigInt::from(4));
            let holds = rem.is_zero();
            (b, rem, 4, holds)
        }
    };
    ObservationOutcome {
        observation: which,
        k,
        horizon,
        holds,
        left,
        right,
        factor: BigInt::from(factor),
    }
}

/// `whole / factor == part`, with the division required to be exact.
fn divides_into(whole: &Integer, factor: u32, part: &Integer) -> bool {
    exact_div(whole.clone(), factor, "observation").is_ok_and(|q| &q == part)
}

// ---------------------------------------------------------------------------
// Closed form vs oracle

/// Closed form (when one exists) next to the oracle value for one query.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdReport {
    pub kind: SequenceKind,
    pub k: usize,
    pub m: u32,
    /// `None` for oracle-only queries.
    #[serde(with = "crate::decimal::option")]
    pub closed_form: Option<Integer>,
    #[serde(with = "crate::decimal")]
    pub oracle: Integer,
    /// True when there is no closed form to disagree with.
    pub agree: bool,
    pub horizon: usize,
    pub stabilized_at: usize,
}

impl GcdReport {
    pub fn oracle_only(&self) -> bool {
        self.closed_form.is_none()
    }
}

/// Evaluates the closed form (if any) and the oracle for `q`.
///
/// Errors only if the closed form itself is internally inconsistent.
pub fn gcd_report(q: CurlQuery, horizon: usize) -> Result<GcdReport> {
    let closed_form = match curl_closed(q) {
        Ok(v) => Some(v),
        Err(Error::UnsupportedQuery { .. }) => None,
        Err(e) => return Err(e),
    };
    let oracle = curl_oracle(q.kind, q.k, q.m, horizon);
    let agree = closed_form.as_ref().map_or(true, |c| *c == oracle.value);
    Ok(GcdReport {
        kind: q.kind,
        k: q.k,
        m: q.m,
        closed_form,
        oracle: oracle.value,
        agree,
        horizon,
        stabilized_at: oracle.stabilized_at,
    })
}
