//! p-adic valuations, the 2-adic facts behind the cobalancing closed form,
//! entry points (ranks of apparition) modulo a prime, and a scanner for the
//! `gcd(Q_k, k) > 1` entry-point criterion.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::identities::{IdentityReport, ParamRange};
use crate::sequences::{terms, SequenceKind, SequenceTable};
use crate::Integer;

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime divisors of `n` in increasing order, by trial division.
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Exponent of the prime `p` in `|n|`.
pub fn nu(p: u64, n: &Integer) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    if n.is_zero() {
        return Err(Error::InfiniteValuation);
    }
    let p = BigInt::from(p);
    let mut n = n.abs();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Ok(v);
        }
        n = q;
        v += 1;
    }
}

fn nu2(n: &Integer) -> Option<u64> {
    n.trailing_zeros()
}

/// `ν₂(P_k) = ν₂(k)` for `k ∈ [1, k_max]`.
pub fn verify_nu2_pell(k_max: usize) -> IdentityReport {
    let pell = terms(SequenceKind::Pell, 0, k_max + 1);
    let mut report = IdentityReport::new("nu2_pell", vec![ParamRange::new("k", 1, k_max as u64)]);
    for (k, p) in pell.iter().enumerate().skip(1) {
        let lhs = nu2(p).expect("P_k is nonzero for k >= 1");
        let rhs = k.trailing_zeros() as u64;
        report.check_eq(&[("k", k as u64)], lhs.into(), rhs.into());
    }
    report
}

/// `ν₂(P_kQ_k − k) ≥ 2` for `k ∈ [2, k_max]`. Failure rows carry the
/// valuation as `lhs` and the bound 2 as `rhs`.
pub fn verify_nu2_product(k_max: usize) -> IdentityReport {
    let t = SequenceTable::new(k_max + 1);
    let mut report = IdentityReport::new(
        "nu2_pq_minus_k",
        vec![ParamRange::new("k", 2, k_max as u64)],
    );
    for k in 2..=k_max {
        let x = t.p(k) * t.q(k) - BigInt::from(k);
        // x = 0 has infinite valuation and satisfies the bound.
        let (lhs, holds) = match nu2(&x) {
            Some(v) => (BigInt::from(v), v >= 2),
            None => (BigInt::from(-1), true),
        };
        report.check(&[("k", k as u64)], lhs, BigInt::from(2), holds);
    }
    report
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryPointRecord {
    pub kind: SequenceKind,
    pub p: u64,
    /// Least `r > 0` with `p | S_r`, if any.
    pub entry: Option<usize>,
    /// Period of the sequence modulo `p`.
    pub period: usize,
}

/// Residues of `kind` modulo `p`, starting at `S_0`, in `[0, p)`.
#[derive(Debug, Clone)]
pub struct ResidueIter {
    p: u64,
    a: u64,
    b: u64,
    drift: u64,
    prev: u64,
    cur: u64,
}

impl ResidueIter {
    pub fn new(kind: SequenceKind, p: u64) -> Self {
        let rec = kind.recurrence();
        let m = p as i64;
        let red = |x: i64| x.rem_euclid(m) as u64;
        ResidueIter {
            p,
            a: red(rec.a),
            b: red(rec.b),
            drift: red(rec.drift),
            prev: red(rec.initial[0]),
            cur: red(rec.initial[1]),
        }
    }

    fn state(&self) -> (u64, u64) {
        (self.prev, self.cur)
    }
}

impl Iterator for ResidueIter {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let p = self.p as u128;
        let next = (self.a as u128 * self.cur as u128
            + self.b as u128 * self.prev as u128
            + self.drift as u128)
            % p;
        let out = self.prev;
        self.prev = self.cur;
        self.cur = next as u64;
        Some(out)
    }
}

/// Entry point of `p` in `kind`, found by iterating the recurrence modulo `p`
/// over one full period. The state `(S_{n−1}, S_n) mod p` determines the
/// rest of the sequence (the cobalancing drift is a constant), and the
/// state map is invertible, so the initial state recurs within `p²` steps.
pub fn entry_point(kind: SequenceKind, p: u64) -> Result<EntryPointRecord> {
    if !is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let mut it = ResidueIter::new(kind, p);
    let initial = it.state();
    it.next(); // S_0; the search starts at r = 1
    let mut entry = None;
    let mut period = 0;
    loop {
        period += 1;
        let r = period;
        let residue = it.next().expect("infinite iterator");
        if residue == 0 && entry.is_none() {
            entry = Some(r);
        }
        // After consuming S_r, the iterator's state is (S_{r+1}, S_{r+2}).
        // The period is the least r with (S_r, S_{r+1}) = (S_0, S_1).
        if (residue, it.prev) == initial {
            break;
        }
    }
    // A zero found at r = period is S_0 recurring; it still counts as r > 0.
    Ok(EntryPointRecord {
        kind,
        p,
        entry,
        period,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub p: u64,
    /// `e_Q(p)`.
    pub entry: usize,
}

/// Result of testing the entry-point criterion at one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureFinding {
    pub k: u64,
    #[serde(with = "crate::decimal")]
    pub gcd_qk_k: Integer,
    /// Primes `p | k` whose entry point in `Q` also divides `k`.
    pub witnesses: Vec<Witness>,
    /// `gcd(Q_k, k) > 1` exactly when `witnesses` is nonempty.
    #[serde(rename = "holds")]
    pub biconditional_holds: bool,
}

impl ConjectureFinding {
    pub fn is_counterexample(&self) -> bool {
        !self.biconditional_holds
    }
}

/// Tests, for every `k ∈ [1, k_max]`, whether `gcd(Q_k, k) > 1` holds exactly
/// when some prime `p | k` has `e_Q(p) | k`. Counterexamples are returned as
/// findings with `biconditional_holds = false`.
pub fn conjecture_scan(k_max: u64) -> Vec<ConjectureFinding> {
    // Entry points are computed once per prime before the k sweep.
    let mut entries = std::collections::BTreeMap::new();
    for k in 1..=k_max {
        for p in prime_factors(k) {
            entries.entry(p).or_insert_with(|| {
                entry_point(SequenceKind::AssociatedPell, p)
                    .expect("factor is prime")
                    .entry
            });
        }
    }

    let q = terms(SequenceKind::AssociatedPell, 0, k_max as usize + 1);
    (1..=k_max)
        .map(|k| {
            let witnesses: Vec<Witness> = prime_factors(k)
                .into_iter()
                .filter_map(|p| match entries[&p] {
                    Some(e) if k % e as u64 == 0 => Some(Witness { p, entry: e }),
                    _ => None,
                })
                .collect();
            let g = gcd(&q[k as usize], &BigInt::from(k));
            let holds = (g > BigInt::one()) == !witnesses.is_empty();
            ConjectureFinding {
                k,
                gcd_qk_k: g,
                witnesses,
                biconditional_holds: holds,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use SequenceKind::*;

    fn int(x: i64) -> Integer {
        BigInt::from(x)
    }

    #[test]
    fn nu_examples() {
        assert_eq!(nu(2, &int(12)), Ok(2));
        assert_eq!(nu(2, &int(408)), Ok(3));
        assert_eq!(nu(2, &int(8)), Ok(3));
        assert_eq!(nu(7, &int(41)), Ok(0));
        assert_eq!(nu(3, &int(-54)), Ok(3));
    }

    #[test]
    fn nu_errors() {
        assert_eq!(nu(2, &int(0)), Err(Error::InfiniteValuation));
        assert!(matches!(nu(4, &int(8)), Err(Error::Domain(_))));
        assert!(matches!(nu(1, &int(8)), Err(Error::Domain(_))));
    }

    #[test]
    fn nu2_lemmas() {
        assert!(verify_nu2_pell(16).passed());
        assert_eq!(nu(2, &crate::term(Pell, 12)), Ok(2));
        assert_eq!(crate::term(Pell, 12), int(13860));
        // P2 Q2 - 2 = 4, P3 Q3 - 3 = 32
        assert_eq!(nu(2, &int(4)), Ok(2));
        assert_eq!(nu(2, &int(32)), Ok(5));
        let r = verify_nu2_product(200);
        assert!(r.passed());
        assert_eq!(r.checked, 199);
    }

    #[test]
    fn nu2_lemmas_to_2048() {
        assert!(verify_nu2_pell(2048).passed());
        assert!(verify_nu2_product(2048).passed());
    }

    #[test]
    fn entry_point_examples() {
        assert_eq!(entry_point(AssociatedPell, 7).unwrap().entry, Some(3));
        assert_eq!(entry_point(Pell, 2).unwrap().entry, Some(2));
        assert_eq!(entry_point(AssociatedPell, 2).unwrap().entry, None);
        assert!(matches!(entry_point(Pell, 9), Err(Error::Domain(_))));
    }

    #[test]
    fn entry_point_periods() {
        // P mod 2: 0 1 0 1 ...; Q mod 2: 1 1 1 ...
        assert_eq!(entry_point(Pell, 2).unwrap().period, 2);
        assert_eq!(entry_point(AssociatedPell, 2).unwrap().period, 1);
        // b mod 2: 0 0 0 ..., entry at r = 1
        let b = entry_point(Cobalancing, 2).unwrap();
        assert_eq!((b.entry, b.period), (Some(1), 1));
        // c_0 = -1 ≡ 4 (mod 5); c: 4 1 2 1 4 3 | 4 1 ..., period 6, no zero
        let c = entry_point(LucasCobalancing, 5).unwrap();
        assert_eq!((c.entry, c.period), (None, 6));
    }

    #[test]
    fn residues_match_big_terms() {
        for kind in SequenceKind::ALL {
            for p in [2u64, 3, 5, 7, 11, 13, 97] {
                let big = terms(kind, 0, 200);
                let small: Vec<u64> = ResidueIter::new(kind, p).take(200).collect();
                for (n, (x, r)) in big.iter().zip(&small).enumerate() {
                    assert_eq!(
                        x.mod_floor(&int(p as i64)),
                        int(*r as i64),
                        "{kind} n={n} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn entry_points_are_minimal_and_consistent() {
        let primes: Vec<u64> = (2..200).filter(|&p| is_prime(p)).collect();
        for kind in SequenceKind::ALL {
            let big = terms(kind, 0, 401);
            for &p in &primes {
                let rec = entry_point(kind, p).unwrap();
                let pp = int(p as i64);
                let divisible = |r: usize| big[r].mod_floor(&pp).is_zero();
                match rec.entry {
                    Some(e) => {
                        assert!(e >= 1 && e <= rec.period);
                        if e <= 400 {
                            assert!(divisible(e), "{kind} p={p} e={e}");
                            assert!((1..e).all(|r| !divisible(r)), "{kind} p={p} not minimal");
                        }
                    }
                    None => {
                        let upto = rec.period.min(400);
                        assert!((1..=upto).all(|r| !divisible(r)), "{kind} p={p}");
                    }
                }
            }
        }
    }

    #[test]
    fn qell_zero_pattern_within_period() {
        // Q_k ≡ 0 (mod p) exactly where the modular scan has a zero.
        let q = terms(AssociatedPell, 0, 201);
        for p in [3u64, 5, 7, 11, 13, 17, 23, 31, 41] {
            let residues: Vec<u64> = ResidueIter::new(AssociatedPell, p).take(201).collect();
            for k in 1..=200 {
                assert_eq!(
                    q[k].mod_floor(&int(p as i64)).is_zero(),
                    residues[k] == 0,
                    "p={p} k={k}"
                );
            }
        }
    }

    #[test]
    fn conjecture_examples() {
        let findings = conjecture_scan(21);
        assert_eq!(findings.len(), 21);
        let f1 = &findings[0];
        assert_eq!((f1.k, f1.gcd_qk_k.clone()), (1, int(1)));
        assert!(f1.witnesses.is_empty() && f1.biconditional_holds);
        let f2 = &findings[1];
        assert_eq!(f2.gcd_qk_k, int(1));
        assert!(f2.witnesses.is_empty() && f2.biconditional_holds);
        let f21 = &findings[20];
        assert_eq!(f21.gcd_qk_k, int(7));
        assert_eq!(f21.witnesses, vec![Witness { p: 7, entry: 3 }]);
        assert!(f21.biconditional_holds);
    }

    #[test]
    fn scan_surfaces_k_twelve() {
        // 3 | 12 and e_Q(3) = 2 | 12, yet Q_12 = 19601 ≡ 2 (mod 3).
        let f = &conjecture_scan(12)[11];
        assert_eq!(f.k, 12);
        assert_eq!(f.gcd_qk_k, int(1));
        assert_eq!(f.witnesses, vec![Witness { p: 3, entry: 2 }]);
        assert!(f.is_counterexample());
    }

    #[test]
    fn finding_json_shape() {
        let f = conjecture_scan(21).pop().unwrap();
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["k"], 21);
        assert_eq!(json["gcd_qk_k"], "7");
        assert_eq!(json["witnesses"][0]["p"], 7);
        assert_eq!(json["witnesses"][0]["entry"], 3);
        assert_eq!(json["holds"], true);
        assert_eq!(
            serde_json::from_value::<ConjectureFinding>(json).unwrap(),
            f
        );
    }

    #[test]
    fn prime_helpers() {
        assert_eq!(prime_factors(1), Vec::<u64>::new());
        assert_eq!(prime_factors(84), vec![2, 3, 7]);
        assert_eq!(prime_factors(97), vec![97]);
        let small: Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    fn nonzero() -> impl Strategy<Value = i64> {
        prop_oneof![-1_000_000_000i64..-1, 1i64..1_000_000_000]
    }

    proptest! {
        #[test]
        fn nu_of_gcd_is_min(a in nonzero(), b in nonzero(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let (a, b) = (int(a), int(b));
            let g = gcd(&a, &b);
            prop_assert_eq!(nu(p, &g)?, nu(p, &a)?.min(nu(p, &b)?));
        }

        #[test]
        fn nu_of_product_is_sum(a in nonzero(), b in nonzero(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let (a, b) = (int(a), int(b));
            prop_assert_eq!(nu(p, &(&a * &b))?, nu(p, &a)? + nu(p, &b)?);
        }

        #[test]
        fn p_to_nu_divides_exactly(n in nonzero(), pi in 0usize..4) {
            let p = [2u64, 3, 5, 7][pi];
            let n = int(n);
            let v = nu(p, &n)?;
            let pv = BigInt::from(p).pow(v);
            prop_assert!((&n % &pv).is_zero());
            prop_assert!(!(&n % (pv * p)).is_zero());
        }
    }
}
