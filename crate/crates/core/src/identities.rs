//! Numeric checks of the sum, Cassini, GCD, difference-factorization and
//! braid identities, plus the closed forms for `σ_S(k, n) = Σ_{i=1..k} S_{n+i}`.
//!
//! Each identity is exposed as a function returning both sides (or the value
//! under test), and as a sweep over a parameter grid that collects every
//! failing tuple into an [`IdentityReport`].

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{exact_div, gcd, parity_sign};
use crate::error::{Error, Result};
use crate::sequences::{gamma_power, SequenceKind, SequenceTable};
use crate::Integer;

use SequenceKind::*;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamRange {
    pub name: String,
    pub lo: u64,
    pub hi: u64,
}

impl ParamRange {
    pub fn new(name: &str, lo: u64, hi: u64) -> Self {
        ParamRange {
            name: name.to_owned(),
            lo,
            hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: BTreeMap<String, u64>,
    #[serde(with = "crate::decimal")]
    pub lhs: Integer,
    #[serde(with = "crate::decimal")]
    pub rhs: Integer,
}

/// Outcome of checking one identity over a parameter grid.
///
/// `failures` is empty iff the identity held at every checked tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub ranges: Vec<ParamRange>,
    pub checked: u64,
    pub failures: Vec<Failure>,
}

impl IdentityReport {
    pub fn new(identity_id: impl Into<String>, ranges: Vec<ParamRange>) -> Self {
        IdentityReport {
            identity_id: identity_id.into(),
            ranges,
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// Records an equality check.
    pub fn check_eq(&mut self, params: &[(&str, u64)], lhs: Integer, rhs: Integer) {
        let holds = lhs == rhs;
        self.check(params, lhs, rhs, holds);
    }

    /// Records a check whose verdict was decided by the caller (inequalities).
    pub fn check(&mut self, params: &[(&str, u64)], lhs: Integer, rhs: Integer, holds: bool) {
        self.checked += 1;
        if !holds {
            self.failures.push(Failure {
                params: params.iter().map(|&(k, v)| (k.to_owned(), v)).collect(),
                lhs,
                rhs,
            });
        }
    }

    /// Records a tuple where evaluating one side raised an error.
    pub fn check_result(&mut self, params: &[(&str, u64)], sides: Result<(Integer, Integer)>) {
        match sides {
            Ok((lhs, rhs)) => self.check_eq(params, lhs, rhs),
            Err(_) => self.check(params, BigInt::zero(), BigInt::zero(), false),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Combines the results of two workers that checked disjoint parts of the
    /// same grid.
    pub fn merge(&mut self, other: IdentityReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

fn table_for(max_index: usize) -> SequenceTable {
    SequenceTable::new(max_index + 1)
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn require_positive(name: &str, value: usize) -> Result<()> {
    require(value >= 1, || format!("{name} must be at least 1"))
}

// ---------------------------------------------------------------------------
// Prefix sums

/// `Σ_{i=1..k} S_i` from its closed form.
pub fn prefix_sum_closed(kind: SequenceKind, k: usize) -> Result<Integer> {
    require_positive("k", k)?;
    prefix_sum_closed_in(&table_for(2 * k + 1), kind, k)
}

fn prefix_sum_closed_in(t: &SequenceTable, kind: SequenceKind, k: usize) -> Result<Integer> {
    let one = BigInt::one();
    match kind {
        Pell => exact_div(t.q(k + 1) - &one, 2, "(Q_{k+1} - 1)/2"),
        AssociatedPell => Ok(t.p(k + 1) - &one),
        Balancing => exact_div(t.p(2 * k + 1) - &one, 4, "(P_{2k+1} - 1)/4"),
        LucasBalancing => exact_div(t.q(2 * k + 1) - &one, 2, "(Q_{2k+1} - 1)/2"),
        Cobalancing => exact_div(
            t.get(Cobalancing, k + 1) - t.get(Cobalancing, k) - BigInt::from(2 * k),
            4,
            "(b_{k+1} - b_k - 2k)/4",
        ),
        LucasCobalancing => exact_div(t.q(2 * k) - &one, 2, "(Q_{2k} - 1)/2"),
    }
}

pub fn sweep_prefix_sums(k_max: usize) -> Vec<IdentityReport> {
    let t = table_for(2 * k_max + 1);
    SequenceKind::ALL
        .into_iter()
        .map(|kind| {
            let mut report = IdentityReport::new(
                format!("prefix_sum/{kind}"),
                vec![ParamRange::new("k", 1, k_max as u64)],
            );
            let mut running = BigInt::zero();
            for k in 1..=k_max {
                running += t.get(kind, k);
                let closed = prefix_sum_closed_in(&t, kind, k);
                report.check_result(&[("k", k as u64)], closed.map(|c| (running.clone(), c)));
            }
            report
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Cassini

/// Both sides of Cassini's identity for `P` or `Q` at `k`:
/// `S_{k−1}S_{k+1}` and `S_k² + (−1)^k` (Pell) or `S_k² + 2(−1)^{k−1}` (associated Pell).
pub fn cassini(kind: SequenceKind, k: usize) -> Result<(Integer, Integer)> {
    require_positive("k", k)?;
    cassini_in(&table_for(k + 1), kind, k)
}

fn cassini_in(t: &SequenceTable, kind: SequenceKind, k: usize) -> Result<(Integer, Integer)> {
    let correction = match kind {
        Pell => parity_sign(k),
        AssociatedPell => BigInt::from(2) * parity_sign(k - 1),
        other => {
            return Err(Error::Domain(format!(
                "Cassini identity is defined for pell and qell, not {other}"
            )))
        }
    };
    let lhs = t.get(kind, k - 1) * t.get(kind, k + 1);
    let s = t.get(kind, k);
    Ok((lhs, s * s + correction))
}

pub fn sweep_cassini(k_max: usize) -> Vec<IdentityReport> {
    let t = table_for(k_max + 1);
    [Pell, AssociatedPell]
        .into_iter()
        .map(|kind| {
            let mut report = IdentityReport::new(
                format!("cassini/{kind}"),
                vec![ParamRange::new("k", 1, k_max as u64)],
            );
            for k in 1..=k_max {
                report.check_result(&[("k", k as u64)], cassini_in(&t, kind, k));
            }
            report
        })
        .collect()
}

// ---------------------------------------------------------------------------
// GCD identities

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GcdIdentity {
    /// `gcd(P_n, P_{n+1}) = 1`
    PellAdjacent,
    /// `gcd(Q_n, Q_{n+1}) = 1`
    QellAdjacent,
    /// `gcd(P_{2n}, P_{2n+2}) = 2`
    PellEvenTwoApart,
    /// `gcd(P_{2n−1}, P_{2n+1}) = 1`
    PellOddTwoApart,
    /// `gcd(Q_n, Q_{n+2}) = 1`
    QellTwoApart,
}

impl GcdIdentity {
    pub const ALL: [GcdIdentity; 5] = [
        GcdIdentity::PellAdjacent,
        GcdIdentity::QellAdjacent,
        GcdIdentity::PellEvenTwoApart,
        GcdIdentity::PellOddTwoApart,
        GcdIdentity::QellTwoApart,
    ];

    pub fn expected(self) -> u32 {
        match self {
            GcdIdentity::PellEvenTwoApart => 2,
            _ => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GcdIdentity::PellAdjacent => "pell_adjacent",
            GcdIdentity::QellAdjacent => "qell_adjacent",
            GcdIdentity::PellEvenTwoApart => "pell_even_two_apart",
            GcdIdentity::PellOddTwoApart => "pell_odd_two_apart",
            GcdIdentity::QellTwoApart => "q_two_apart",
        }
    }
}

pub fn gcd_identity(which: GcdIdentity, n: usize) -> Result<Integer> {
    require_positive("n", n)?;
    Ok(gcd_identity_in(&table_for(2 * n + 2), which, n))
}

fn gcd_identity_in(t: &SequenceTable, which: GcdIdentity, n: usize) -> Integer {
    match which {
        GcdIdentity::PellAdjacent => gcd(t.p(n), t.p(n + 1)),
        GcdIdentity::QellAdjacent => gcd(t.q(n), t.q(n + 1)),
        GcdIdentity::PellEvenTwoApart => gcd(t.p(2 * n), t.p(2 * n + 2)),
        GcdIdentity::PellOddTwoApart => gcd(t.p(2 * n - 1), t.p(2 * n + 1)),
        GcdIdentity::QellTwoApart => gcd(t.q(n), t.q(n + 2)),
    }
}

pub fn sweep_gcd_identities(n_max: usize) -> Vec<IdentityReport> {
    let t = table_for(2 * n_max + 2);
    GcdIdentity::ALL
        .into_iter()
        .map(|which| {
            let mut report = IdentityReport::new(
                format!("gcd/{}", which.name()),
                vec![ParamRange::new("n", 1, n_max as u64)],
            );
            for n in 1..=n_max {
                report.check_eq(
                    &[("n", n as u64)],
                    gcd_identity_in(&t, which, n),
                    BigInt::from(which.expected()),
                );
            }
            report
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Difference factorizations P_{s+r} − P_r and Q_{s+r} − Q_r

fn check_diff_args(s: usize, r: usize) -> Result<()> {
    require(s >= 2 && s % 2 == 0, || {
        format!("s must be even and at least 2, got {s}")
    })?;
    require_positive("r", r)
}

/// `P_{s+r} − P_r` and its factorization `2P_{s/2}Q_{s/2+r}` (s ≡ 0 mod 4) or
/// `2Q_{s/2}P_{s/2+r}` (s ≡ 2 mod 4).
pub fn diff_factor_pell(s: usize, r: usize) -> Result<(Integer, Integer)> {
    check_diff_args(s, r)?;
    Ok(diff_factor_pell_in(&table_for(s + r), s, r))
}

fn diff_factor_pell_in(t: &SequenceTable, s: usize, r: usize) -> (Integer, Integer) {
    let h = s / 2;
    let diff = t.p(s + r) - t.p(r);
    let factored = if s % 4 == 0 {
        BigInt::from(2) * t.p(h) * t.q(h + r)
    } else {
        BigInt::from(2) * t.q(h) * t.p(h + r)
    };
    (diff, factored)
}

/// `Q_{s+r} − Q_r` and its factorization `4P_{s/2}P_{s/2+r}` (s ≡ 0 mod 4) or
/// `2Q_{s/2}Q_{s/2+r}` (s ≡ 2 mod 4).
pub fn diff_factor_qell(s: usize, r: usize) -> Result<(Integer, Integer)> {
    check_diff_args(s, r)?;
    Ok(diff_factor_qell_in(&table_for(s + r), s, r))
}

fn diff_factor_qell_in(t: &SequenceTable, s: usize, r: usize) -> (Integer, Integer) {
    let h = s / 2;
    let diff = t.q(s + r) - t.q(r);
    let factored = if s % 4 == 0 {
        BigInt::from(4) * t.p(h) * t.p(h + r)
    } else {
        BigInt::from(2) * t.q(h) * t.q(h + r)
    };
    (diff, factored)
}

pub fn sweep_diff_factor(s_max: usize, r_max: usize) -> Vec<IdentityReport> {
    let t = table_for(s_max + r_max);
    let ranges = || {
        vec![
            ParamRange::new("s", 2, s_max as u64),
            ParamRange::new("r", 1, r_max as u64),
        ]
    };
    let mut pell = IdentityReport::new("diff_factor/pell", ranges());
    let mut qell = IdentityReport::new("diff_factor/qell", ranges());
    for s in (2..=s_max).step_by(2) {
        for r in 1..=r_max {
            let params = [("s", s as u64), ("r", r as u64)];
            let (lhs, rhs) = diff_factor_pell_in(&t, s, r);
            pell.check_eq(&params, lhs, rhs);
            let (lhs, rhs) = diff_factor_qell_in(&t, s, r);
            qell.check_eq(&params, lhs, rhs);
        }
    }
    vec![pell, qell]
}

// ---------------------------------------------------------------------------
// Window sums σ_S(k, n)

/// `σ_S(k, n) = Σ_{i=1..k} S_{n+i}` by direct summation.
pub fn sigma_direct(kind: SequenceKind, k: usize, n: usize) -> Integer {
    crate::sequences::terms(kind, n + 1, k).into_iter().sum()
}

fn sigma_direct_in(t: &SequenceTable, kind: SequenceKind, k: usize, n: usize) -> Integer {
    t.row(kind)[n + 1..=n + k].iter().sum()
}

/// `σ_S(k, n)` from its closed form.
///
/// For `P` and `Q` the factored form only exists for even `k`; odd `k` falls
/// back to `½(Q_{n+k+1} − Q_{n+1})` and `P_{n+k+1} − P_{n+1}` respectively.
/// Cobalancing uses `½(B_{k+n} − B_n − k)`.
pub fn sigma_closed(kind: SequenceKind, k: usize, n: usize) -> Result<Integer> {
    require_positive("k", k)?;
    sigma_closed_in(&table_for(2 * k + 2 * n + 1), kind, k, n)
}

fn sigma_closed_in(t: &SequenceTable, kind: SequenceKind, k: usize, n: usize) -> Result<Integer> {
    let two = BigInt::from(2);
    let even = k % 2 == 0;
    let h = k / 2;
    Ok(match kind {
        Pell if !even => return sigma_middle_in(t, kind, k, n),
        Pell if k % 4 == 0 => &two * t.p(h) * t.p(h + n + 1),
        Pell => t.q(h) * t.q(h + n + 1),
        AssociatedPell if !even => return sigma_middle_in(t, kind, k, n),
        AssociatedPell if k % 4 == 0 => &two * t.p(h) * t.q(h + n + 1),
        AssociatedPell => &two * t.q(h) * t.p(h + n + 1),
        Balancing if even => exact_div(t.p(k) * t.q(k + 2 * n + 1), 2, "P_k Q_{k+2n+1}/2")?,
        Balancing => exact_div(t.q(k) * t.p(k + 2 * n + 1), 2, "Q_k P_{k+2n+1}/2")?,
        LucasBalancing if even => &two * t.p(k) * t.p(k + 2 * n + 1),
        LucasBalancing => t.q(k) * t.q(k + 2 * n + 1),
        LucasCobalancing if even => &two * t.p(k) * t.p(k + 2 * n),
        LucasCobalancing => t.q(k) * t.q(k + 2 * n),
        Cobalancing => return sigma_middle_in(t, kind, k, n),
    })
}

/// `σ_S(k, n)` from the unfactored difference expression valid for every `k`.
pub fn sigma_middle(kind: SequenceKind, k: usize, n: usize) -> Result<Integer> {
    require_positive("k", k)?;
    sigma_middle_in(&table_for(2 * k + 2 * n + 1), kind, k, n)
}

fn sigma_middle_in(t: &SequenceTable, kind: SequenceKind, k: usize, n: usize) -> Result<Integer> {
    match kind {
        Pell => exact_div(t.q(n + k + 1) - t.q(n + 1), 2, "(Q_{n+k+1} - Q_{n+1})/2"),
        AssociatedPell => Ok(t.p(n + k + 1) - t.p(n + 1)),
        Balancing => exact_div(
            t.p(2 * k + 2 * n + 1) - t.p(2 * n + 1),
            4,
            "(P_{2k+2n+1} - P_{2n+1})/4",
        ),
        LucasBalancing => exact_div(
            t.q(2 * k + 2 * n + 1) - t.q(2 * n + 1),
            2,
            "(Q_{2k+2n+1} - Q_{2n+1})/2",
        ),
        LucasCobalancing => exact_div(t.q(2 * k + 2 * n) - t.q(2 * n), 2, "(Q_{2k+2n} - Q_{2n})/2"),
        Cobalancing => exact_div(
            t.get(Balancing, k + n) - t.get(Balancing, n) - BigInt::from(k),
            2,
            "(B_{k+n} - B_n - k)/2",
        ),
    }
}

/// For every kind: the closed form against direct summation, and (except
/// cobalancing, which has a single form) the unfactored expression against
/// direct summation.
pub fn sweep_sigma(k_max: usize, n_max: usize) -> Vec<IdentityReport> {
    let t = table_for(2 * k_max + 2 * n_max + 1);
    let ranges = || {
        vec![
            ParamRange::new("k", 1, k_max as u64),
            ParamRange::new("n", 0, n_max as u64),
        ]
    };
    let mut reports = Vec::new();
    for kind in SequenceKind::ALL {
        let mut closed = IdentityReport::new(format!("sigma_closed/{kind}"), ranges());
        let mut middle = IdentityReport::new(format!("sigma_middle/{kind}"), ranges());
        for k in 1..=k_max {
            for n in 0..=n_max {
                let params = [("k", k as u64), ("n", n as u64)];
                let direct = sigma_direct_in(&t, kind, k, n);
                closed.check_result(
                    &params,
                    sigma_closed_in(&t, kind, k, n).map(|c| (direct.clone(), c)),
                );
                if kind != Cobalancing {
                    middle.check_result(
                        &params,
                        sigma_middle_in(&t, kind, k, n).map(|m| (direct, m)),
                    );
                }
            }
        }
        reports.push(closed);
        if kind != Cobalancing {
            reports.push(middle);
        }
    }
    reports
}

// ---------------------------------------------------------------------------
// Consecutive differences t_i of the halved balancing window sums

/// `½(P_{2k+2i} − P_{2i}) − ½(P_{2k+2i−2} − P_{2i−2})` against
/// `2P_kQ_{k+2i−1}` (k even) or `2Q_kP_{k+2i−1}` (k odd).
pub fn t_term(k: usize, i: usize) -> Result<(Integer, Integer)> {
    require_positive("k", k)?;
    require_positive("i", i)?;
    t_term_in(&table_for(2 * k + 2 * i), k, i)
}

fn t_term_in(t: &SequenceTable, k: usize, i: usize) -> Result<(Integer, Integer)> {
    let upper = exact_div(t.p(2 * k + 2 * i) - t.p(2 * i), 2, "(P_{2k+2i} - P_{2i})/2")?;
    let lower = exact_div(
        t.p(2 * k + 2 * i - 2) - t.p(2 * i - 2),
        2,
        "(P_{2k+2i-2} - P_{2i-2})/2",
    )?;
    let two = BigInt::from(2);
    let rhs = if k % 2 == 0 {
        &two * t.p(k) * t.q(k + 2 * i - 1)
    } else {
        &two * t.q(k) * t.p(k + 2 * i - 1)
    };
    Ok((upper - lower, rhs))
}

pub fn sweep_t_lemma(k_max: usize, i_max: usize) -> IdentityReport {
    let t = table_for(2 * k_max + 2 * i_max);
    let mut report = IdentityReport::new(
        "t_lemma",
        vec![
            ParamRange::new("k", 1, k_max as u64),
            ParamRange::new("i", 1, i_max as u64),
        ],
    );
    for k in 1..=k_max {
        for i in 1..=i_max {
            report.check_result(&[("k", k as u64), ("i", i as u64)], t_term_in(&t, k, i));
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Binomial expansion of even-indexed Pell numbers

/// Exact binomial coefficient `C(n, r)`.
pub fn binomial(n: u64, r: u64) -> Integer {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    (0..r).fold(BigInt::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// `P_ℓ` against `Σ_{i=1..ℓ/2} C(ℓ, 2i−1)·2^{i−1}` for even `ℓ`.
pub fn pell_binomial(ell: usize) -> Result<(Integer, Integer)> {
    require(ell >= 2 && ell % 2 == 0, || {
        format!("ell must be even and at least 2, got {ell}")
    })?;
    let rhs = (1..=ell / 2)
        .map(|i| binomial(ell as u64, 2 * i as u64 - 1) << (i - 1))
        .sum();
    Ok((crate::sequences::term(Pell, ell), rhs))
}

pub fn sweep_pell_binomial(ell_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(
        "pell_binomial",
        vec![ParamRange::new("ell", 2, ell_max as u64)],
    );
    for ell in (2..=ell_max).step_by(2) {
        report.check_result(&[("ell", ell as u64)], pell_binomial(ell));
    }
    report
}

// ---------------------------------------------------------------------------
// Braid factorizations of balancing and cobalancing numbers

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidIdentity {
    /// `B_n = P_nQ_n`
    BProduct,
    /// `b_n = P_nQ_{n−1}` (n even), `P_{n−1}Q_n` (n odd)
    BPiecewise,
    /// `b_n + 1 = P_{n−1}Q_n` (n even), `P_nQ_{n−1}` (n odd)
    BPlusOnePiecewise,
    /// `2B_n = b_{n+1} − b_n`
    DoubledBStep,
}

impl BraidIdentity {
    pub const ALL: [BraidIdentity; 4] = [
        BraidIdentity::BProduct,
        BraidIdentity::BPiecewise,
        BraidIdentity::BPlusOnePiecewise,
        BraidIdentity::DoubledBStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BraidIdentity::BProduct => "B_product",
            BraidIdentity::BPiecewise => "b_piecewise",
            BraidIdentity::BPlusOnePiecewise => "b_plus1_piecewise",
            BraidIdentity::DoubledBStep => "doubled_B_step",
        }
    }
}

pub fn braid_identity(which: BraidIdentity, n: usize) -> Result<(Integer, Integer)> {
    require_positive("n", n)?;
    Ok(braid_identity_in(&table_for(n + 1), which, n))
}

fn braid_identity_in(t: &SequenceTable, which: BraidIdentity, n: usize) -> (Integer, Integer) {
    let even = n % 2 == 0;
    let cob = |i| t.get(Cobalancing, i);
    match which {
        BraidIdentity::BProduct => (t.get(Balancing, n).clone(), t.p(n) * t.q(n)),
        BraidIdentity::BPiecewise => {
            let rhs = if even {
                t.p(n) * t.q(n - 1)
            } else {
                t.p(n - 1) * t.q(n)
            };
            (cob(n).clone(), rhs)
        }
        BraidIdentity::BPlusOnePiecewise => {
            let rhs = if even {
                t.p(n - 1) * t.q(n)
            } else {
                t.p(n) * t.q(n - 1)
            };
            (cob(n) + 1u32, rhs)
        }
        BraidIdentity::DoubledBStep => (t.get(Balancing, n) * 2u32, cob(n + 1) - cob(n)),
    }
}

/// The four braid identities plus the coprimality of consecutive `P` and of
/// consecutive `Q` terms they rest on.
pub fn sweep_braids(n_max: usize) -> Vec<IdentityReport> {
    let t = table_for(n_max + 1);
    let range = || vec![ParamRange::new("n", 1, n_max as u64)];
    let mut reports: Vec<IdentityReport> = BraidIdentity::ALL
        .into_iter()
        .map(|which| {
            let mut report = IdentityReport::new(format!("braid/{}", which.name()), range());
            for n in 1..=n_max {
                let (lhs, rhs) = braid_identity_in(&t, which, n);
                report.check_eq(&[("n", n as u64)], lhs, rhs);
            }
            report
        })
        .collect();
    for kind in [Pell, AssociatedPell] {
        let mut report = IdentityReport::new(format!("braid/coprime_{kind}"), range());
        for n in 1..=n_max {
            report.check_eq(
                &[("n", n as u64)],
                gcd(t.get(kind, n - 1), t.get(kind, n)),
                BigInt::one(),
            );
        }
        reports.push(report);
    }
    reports
}

// ---------------------------------------------------------------------------
// Binet forms through ℤ[√2]

/// `γⁿ = Q_n + P_n√2`, and the relations `2B_n = P_{2n}`, `C_n = Q_{2n}`,
/// `c_n = Q_{2n−1}`, `2b_n + 1 = P_{2n−1}` (for n ≥ 1).
pub fn sweep_binet(n_max: usize) -> Vec<IdentityReport> {
    let t = table_for(2 * n_max);
    let mut gamma = IdentityReport::new(
        "binet/gamma_power",
        vec![ParamRange::new("n", 0, n_max as u64)],
    );
    let mut power = gamma_power(0);
    let step = gamma_power(1);
    for n in 0..=n_max {
        let params = [("n", n as u64)];
        gamma.check_eq(&params, power.a.clone(), t.q(n).clone());
        gamma.check_eq(&params, power.b.clone(), t.p(n).clone());
        power = &power * &step;
    }

    let range = || vec![ParamRange::new("n", 1, n_max as u64)];
    let mut balancing = IdentityReport::new("binet/balancing_half_even_pell", range());
    let mut lucas_balancing = IdentityReport::new("binet/lucas_balancing_even_qell", range());
    let mut lucas_cobalancing = IdentityReport::new("binet/lucas_cobalancing_odd_qell", range());
    let mut cobalancing = IdentityReport::new("binet/cobalancing_odd_pell", range());
    for n in 1..=n_max {
        let params = [("n", n as u64)];
        balancing.check_eq(&params, t.get(Balancing, n) * 2u32, t.p(2 * n).clone());
        lucas_balancing.check_eq(
            &params,
            t.get(LucasBalancing, n).clone(),
            t.q(2 * n).clone(),
        );
        lucas_cobalancing.check_eq(
            &params,
            t.get(LucasCobalancing, n).clone(),
            t.q(2 * n - 1).clone(),
        );
        cobalancing.check_eq(
            &params,
            t.get(Cobalancing, n) * 2u32 + 1u32,
            t.p(2 * n - 1).clone(),
        );
    }
    vec![
        gamma,
        balancing,
        lucas_balancing,
        lucas_cobalancing,
        cobalancing,
    ]
}
