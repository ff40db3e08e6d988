//! Acceptance criteria, one PASS/FAIL line each. Every check is exact; each
//! criterion also carries a wall-clock bound.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use pellbraid::identities::{self, IdentityReport};
use pellbraid::padic::{verify_nu2_pell, verify_nu2_product};
use pellbraid::SequenceKind::{self, *};
use pellbraid::{
    conjecture_scan, curl_b_intermediary, curl_closed, curl_oracle, observation_check, table,
    CurlQuery, Integer, Observation, DEFAULT_HORIZON,
};

const TABLE1: [(SequenceKind, [i64; 11]); 6] = [
    (Pell, [0, 1, 2, 5, 12, 29, 70, 169, 408, 985, 2378]),
    (
        AssociatedPell,
        [1, 1, 3, 7, 17, 41, 99, 239, 577, 1393, 3363],
    ),
    (
        Balancing,
        [
            0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105, 7997214,
        ],
    ),
    (
        LucasBalancing,
        [
            1, 3, 17, 99, 577, 3363, 19601, 114243, 665857, 3880899, 22619537,
        ],
    ),
    (
        Cobalancing,
        [0, 0, 2, 14, 84, 492, 2870, 16730, 97512, 568344, 3312554],
    ),
    (
        LucasCobalancing,
        [
            -1, 1, 7, 41, 239, 1393, 8119, 47321, 275807, 1607521, 9369319,
        ],
    ),
];

const TABLE2: [(SequenceKind, &[i64]); 2] = [
    (Pell, &[1, 1, 1, 4, 1, 7, 1, 24, 1, 41, 1, 140, 1, 239]),
    (
        AssociatedPell,
        &[1, 2, 1, 4, 1, 14, 1, 24, 1, 82, 1, 140, 1, 478],
    ),
];

const TABLE3: [(SequenceKind, &[i64]); 2] = [
    (
        Balancing,
        &[1, 1, 7, 6, 41, 35, 239, 204, 1393, 1189, 8119, 6930, 47321],
    ),
    (
        LucasBalancing,
        &[
            1, 4, 7, 24, 41, 140, 239, 816, 1393, 4756, 8119, 27720, 47321,
        ],
    ),
];

const TABLE4: [(SequenceKind, &[i64]); 2] = [
    (Cobalancing, &[2, 2, 2, 4, 2, 2, 2, 8, 2, 2, 2, 12, 2]),
    (
        LucasCobalancing,
        &[
            1, 8, 7, 48, 41, 280, 239, 1632, 1393, 9512, 8119, 55440, 47321,
        ],
    ),
];

const ORACLE_HORIZON: usize = DEFAULT_HORIZON;
const HALF_HORIZON: usize = 32;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, Duration, fn() -> Outcome);

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn criterion_1() -> Outcome {
    for (kind, expected) in TABLE1 {
        let got = pellbraid::terms(kind, 0, 11);
        let want: Vec<Integer> = expected.iter().map(|&v| int(v)).collect();
        if got != want {
            return Err(format!("{kind}: got {got:?}"));
        }
    }
    let t = table(1).map_err(|e| e.to_string())?;
    for (row, (_, expected)) in t.rows.iter().zip(TABLE1) {
        let want: Vec<Integer> = expected.iter().map(|&v| int(v)).collect();
        if row.values != want {
            return Err(format!("table row {} differs", row.label));
        }
    }
    Ok("6 sequences x 11 terms exact".into())
}

/// Checks a curl table row-for-row via the closed forms, the oracle, and the
/// table builder.
fn curl_table(which: u8, rows: &[(SequenceKind, &[i64]); 2]) -> Outcome {
    let t = table(which).map_err(|e| e.to_string())?;
    let mut checked = 0;
    for ((kind, expected), row) in rows.iter().zip(&t.rows) {
        for (i, &want) in expected.iter().enumerate() {
            let k = i + 1;
            let want = int(want);
            let closed = curl_closed(CurlQuery::new(*kind, k, 1)).map_err(|e| e.to_string())?;
            let oracle = curl_oracle(*kind, k, 1, ORACLE_HORIZON).value;
            if closed != want || oracle != want || row.values[i] != want {
                return Err(format!(
                    "{kind} k={k}: expected {want}, closed {closed}, oracle {oracle}, table {}",
                    row.values[i]
                ));
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} entries, closed form = oracle = reference"
    ))
}

fn criterion_2() -> Outcome {
    curl_table(2, &TABLE2)
}

fn criterion_3() -> Outcome {
    curl_table(3, &TABLE3)
}

fn criterion_4() -> Outcome {
    curl_table(4, &TABLE4)
}

fn summarize(reports: &[IdentityReport]) -> Outcome {
    let checked: u64 = reports.iter().map(|r| r.checked).sum();
    let failed: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{} ({} failures)", r.identity_id, r.failures.len()))
        .collect();
    if failed.is_empty() {
        Ok(format!(
            "{} identities, {checked} checks, 0 failures",
            reports.len()
        ))
    } else {
        Err(failed.join(", "))
    }
}

fn criterion_5() -> Outcome {
    let mut reports = Vec::new();
    reports.extend(identities::sweep_prefix_sums(300));
    reports.extend(identities::sweep_cassini(500));
    reports.extend(identities::sweep_gcd_identities(300));
    reports.extend(identities::sweep_diff_factor(120, 120));
    reports.extend(identities::sweep_sigma(60, 60));
    reports.push(identities::sweep_t_lemma(100, 100));
    reports.push(identities::sweep_pell_binomial(200));
    reports.extend(identities::sweep_braids(200));

    let expect = |prefix: &str, n: usize| {
        let found = reports
            .iter()
            .filter(|r| r.identity_id.starts_with(prefix))
            .count();
        (found == n)
            .then_some(())
            .ok_or(format!("expected {n} {prefix} reports, found {found}"))
    };
    expect("prefix_sum/", 6)?;
    expect("cassini/", 2)?;
    expect("gcd/", 5)?;
    expect("diff_factor/", 2)?;
    expect("sigma_closed/cobalancing", 1)?;
    expect("braid/doubled_B_step", 1)?;
    summarize(&reports)
}

fn criterion_6() -> Outcome {
    for k in 1..=200 {
        let stage = curl_b_intermediary(k).map_err(|e| e.to_string())?;
        let closed = curl_closed(CurlQuery::new(Cobalancing, k, 1)).map_err(|e| e.to_string())?;
        if stage != closed {
            return Err(format!("k={k}: intermediary {stage}, closed {closed}"));
        }
        if k <= 40 {
            let oracle = curl_oracle(Cobalancing, k, 1, ORACLE_HORIZON).value;
            if oracle != closed {
                return Err(format!("k={k}: oracle {oracle}, closed {closed}"));
            }
        }
    }
    Ok("k <= 200 stages agree; oracle agrees for k <= 40".into())
}

fn criterion_7() -> Outcome {
    summarize(&[verify_nu2_pell(2048), verify_nu2_product(2048)])
}

fn criterion_8() -> Outcome {
    for kind in [Pell, AssociatedPell] {
        for k in 1..=40 {
            let closed = curl_closed(CurlQuery::new(kind, k, 2)).map_err(|e| e.to_string())?;
            let oracle = curl_oracle(kind, k, 2, ORACLE_HORIZON).value;
            if closed != oracle {
                return Err(format!("{kind}^2 k={k}: closed {closed}, oracle {oracle}"));
            }
        }
    }
    for which in Observation::ALL {
        for k in 1..=40 {
            let o = observation_check(which, k, ORACLE_HORIZON);
            if !o.holds {
                return Err(format!(
                    "{} k={k}: left {}, right {}, factor {}",
                    which.name(),
                    o.left,
                    o.right,
                    o.factor
                ));
            }
        }
    }
    Ok("2 squared closed forms and 3 observations hold for k <= 40".into())
}

fn criterion_9() -> Outcome {
    let findings = conjecture_scan(500);
    let f21 = findings
        .iter()
        .find(|f| f.k == 21)
        .ok_or("k = 21 missing")?;
    let worked = f21.gcd_qk_k == int(7)
        && f21.witnesses.len() == 1
        && f21.witnesses[0].p == 7
        && f21.witnesses[0].entry == 3
        && f21.biconditional_holds;
    let counter: Vec<u64> = findings
        .iter()
        .filter(|f| f.is_counterexample())
        .map(|f| f.k)
        .collect();
    match (worked, counter.is_empty()) {
        (true, true) => Ok("500 k scanned, 0 counterexamples, k = 21 reproduced".into()),
        (false, _) => Err(format!("k = 21 instance not reproduced: {f21:?}")),
        (true, false) => Err(format!(
            "k = 21 reproduced, but {} counterexamples for k <= 500 (first: {}; e.g. gcd(Q_12, 12) = 1 with witness p = 3, e_Q(3) = 2)",
            counter.len(),
            counter.iter().take(6).map(u64::to_string).collect::<Vec<_>>().join(", ")
        )),
    }
}

fn criterion_10() -> Outcome {
    let mut queries: Vec<(SequenceKind, usize, u32)> = Vec::new();
    for (kind, values) in TABLE2.iter().chain(&TABLE3).chain(&TABLE4) {
        queries.extend((1..=values.len()).map(|k| (*kind, k, 1)));
    }
    for kind in SequenceKind::ALL {
        queries.extend((1..=40).map(|k| (kind, k, 2)));
    }
    for &(kind, k, m) in &queries {
        let full = curl_oracle(kind, k, m, ORACLE_HORIZON);
        let half = curl_oracle(kind, k, m, HALF_HORIZON);
        if !full.stable || half.value != full.value {
            return Err(format!(
                "{kind} k={k} m={m}: horizon {HALF_HORIZON} gives {}, horizon {ORACLE_HORIZON} gives {}",
                half.value, full.value
            ));
        }
    }
    Ok(format!(
        "{} queries stable between horizons {HALF_HORIZON} and {ORACLE_HORIZON}",
        queries.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            1,
            "sequence table, indices 0..10",
            Duration::from_secs(1),
            criterion_1,
        ),
        (
            2,
            "P/Q curl table, k = 1..14",
            Duration::from_secs(5),
            criterion_2,
        ),
        (
            3,
            "B/C curl table, k = 1..13",
            Duration::from_secs(5),
            criterion_3,
        ),
        (
            4,
            "b/c curl table, k = 1..13",
            Duration::from_secs(5),
            criterion_4,
        ),
        (5, "identity sweeps", Duration::from_secs(30), criterion_5),
        (
            6,
            "cobalancing two-stage equivalence",
            Duration::from_secs(10),
            criterion_6,
        ),
        (
            7,
            "2-adic lemmas, k <= 2048",
            Duration::from_secs(10),
            criterion_7,
        ),
        (
            8,
            "squared-sum partial results, k <= 40",
            Duration::from_secs(60),
            criterion_8,
        ),
        (
            9,
            "entry-point conjecture scan, k <= 500",
            Duration::from_secs(30),
            criterion_9,
        ),
        (
            10,
            "oracle stability, horizon 32 vs 64",
            Duration::from_secs(60),
            criterion_10,
        ),
    ];

    let mut failed = 0;
    for (id, name, bound, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > bound => Err(format!("{detail}, but exceeded {bound:?}")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if outcome.is_err() {
            failed += 1;
        }
        println!("{tag} criterion {id:>2}: {name} [{elapsed:.2?}] {detail}");
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
