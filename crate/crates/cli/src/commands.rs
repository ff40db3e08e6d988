use num_bigint::BigInt;
use pellbraid::identities::{self, IdentityReport};
use pellbraid::{
    conjecture_scan, curl_source, gcd_report, padic, table, terms, CurlQuery, CurlSource,
    SequenceKind,
};
use serde::{Deserialize, Serialize};

use crate::args::{CurlArgs, Format, ScanArgs, SeqArgs, Suite, TablesArgs, VerifyArgs};
use crate::render::{ascii_grid, csv_line, json};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_COUNTEREXAMPLE: u8 = 3;

/// What a command produced: the main output, an optional note for stderr, and
/// the process exit code.
pub struct Outcome {
    pub stdout: String,
    pub stderr: Option<String>,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: None,
            code: EXIT_OK,
        }
    }
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
struct SeqRow {
    kind: SequenceKind,
    start: usize,
    #[serde(with = "pellbraid::decimal::vec")]
    terms: Vec<BigInt>,
}

pub fn seq(args: &SeqArgs, format: Format) -> Outcome {
    let kinds: Vec<SequenceKind> = match args.kind {
        Some(kind) if !args.all_kinds => vec![kind.into()],
        _ => SequenceKind::ALL.to_vec(),
    };
    let rows: Vec<SeqRow> = kinds
        .into_iter()
        .map(|kind| SeqRow {
            kind,
            start: args.start,
            terms: terms(kind, args.start, args.count),
        })
        .collect();

    let indices: Vec<String> = (args.start..args.start + args.count)
        .map(|n| n.to_string())
        .collect();
    let out = match format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = csv_line(&[vec!["kind".to_owned()], indices].concat());
            for row in &rows {
                s.push_str(&csv_line(
                    &[vec![row.kind.to_string()], strings(&row.terms)].concat(),
                ));
            }
            s
        }
        Format::Ascii => {
            let header = [vec!["n".to_owned()], indices].concat();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|row| [vec![row.kind.to_string()], strings(&row.terms)].concat())
                .collect();
            ascii_grid(&header, &body)
        }
    };
    Outcome::ok(out)
}

// ---------------------------------------------------------------------------

pub fn curl(args: &CurlArgs, format: Format) -> Outcome {
    let query = CurlQuery::new(args.kind.into(), args.k as usize, args.m);
    let report = match gcd_report(query, args.horizon as usize) {
        Ok(r) => r,
        Err(e) => {
            return Outcome {
                stdout: String::new(),
                stderr: Some(format!("error: {e}\n")),
                code: EXIT_FAILURE,
            }
        }
    };
    let closed = report
        .closed_form
        .as_ref()
        .map_or_else(|| "oracle-only".to_owned(), ToString::to_string);
    let out = match format {
        Format::Json => json(&report),
        Format::Csv => {
            let mut s = csv_line(&[
                "kind",
                "k",
                "m",
                "closed_form",
                "oracle",
                "agree",
                "horizon",
                "stabilized_at",
            ]);
            s.push_str(&csv_line(&[
                report.kind.to_string(),
                report.k.to_string(),
                report.m.to_string(),
                closed,
                report.oracle.to_string(),
                report.agree.to_string(),
                report.horizon.to_string(),
                report.stabilized_at.to_string(),
            ]));
            s
        }
        Format::Ascii => {
            let verdict = match (report.oracle_only(), report.agree) {
                (true, _) => "n/a (no closed form; oracle-only)",
                (false, true) => "agree",
                (false, false) => "DISAGREE",
            };
            format!(
                "{} k={} m={}\nclosed form : {}\noracle      : {} (horizon {}, stable after {} offsets)\nverdict     : {}\n",
                report.kind,
                report.k,
                report.m,
                closed,
                report.oracle,
                report.horizon,
                report.stabilized_at,
                verdict
            )
        }
    };
    Outcome {
        stdout: out,
        stderr: None,
        code: if report.agree { EXIT_OK } else { EXIT_FAILURE },
    }
}

// ---------------------------------------------------------------------------

fn bound(value: Option<u64>, default: usize) -> usize {
    value.map_or(default, |v| v as usize)
}

/// Runs the sweeps making up `suite`. Bounds default to the sizes the
/// identities are routinely checked at.
pub fn run_suite(suite: Suite, max_k: Option<u64>, max_n: Option<u64>) -> Vec<IdentityReport> {
    let mut out = Vec::new();
    let wants = |s: Suite| suite == s || suite == Suite::All;
    if wants(Suite::Sums) {
        out.extend(identities::sweep_prefix_sums(bound(max_k, 300)));
    }
    if wants(Suite::Cassini) {
        out.extend(identities::sweep_cassini(bound(max_k, 500)));
    }
    if wants(Suite::GcdLemmas) {
        out.extend(identities::sweep_gcd_identities(bound(max_k, 300)));
    }
    if wants(Suite::Identities) {
        out.extend(identities::sweep_diff_factor(
            bound(max_k, 120),
            bound(max_n, 120),
        ));
        out.push(identities::sweep_t_lemma(
            bound(max_k, 100),
            bound(max_n, 100),
        ));
        out.push(identities::sweep_pell_binomial(bound(max_k, 200)));
        out.extend(identities::sweep_binet(bound(max_k, 256)));
    }
    if wants(Suite::Sigma) {
        out.extend(identities::sweep_sigma(bound(max_k, 60), bound(max_n, 60)));
    }
    if wants(Suite::Padic) {
        let k = bound(max_k, 2048);
        out.push(padic::verify_nu2_pell(k));
        out.push(padic::verify_nu2_product(k.max(2)));
    }
    if wants(Suite::Braids) {
        out.extend(identities::sweep_braids(bound(max_k, 200)));
    }
    out.sort_by(|a, b| a.identity_id.cmp(&b.identity_id));
    out
}

fn ranges_text(report: &IdentityReport) -> String {
    report
        .ranges
        .iter()
        .map(|r| format!("{}={}..{}", r.name, r.lo, r.hi))
        .collect::<Vec<_>>()
        .join(";")
}

fn params_text(params: &std::collections::BTreeMap<String, u64>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn verify(args: &VerifyArgs, format: Format) -> Outcome {
    let reports = run_suite(args.suite, args.max_k, args.max_n);
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let out = match format {
        Format::Json => json(&reports),
        Format::Csv => {
            let mut s = csv_line(&[
                "identity_id",
                "ranges",
                "checked",
                "failures",
                "params",
                "lhs",
                "rhs",
            ]);
            for r in &reports {
                s.push_str(&csv_line(&[
                    r.identity_id.clone(),
                    ranges_text(r),
                    r.checked.to_string(),
                    r.failures.len().to_string(),
                    String::new(),
                    String::new(),
                    String::new(),
                ]));
                for f in &r.failures {
                    s.push_str(&csv_line(&[
                        r.identity_id.clone(),
                        String::new(),
                        String::new(),
                        String::new(),
                        params_text(&f.params),
                        f.lhs.to_string(),
                        f.rhs.to_string(),
                    ]));
                }
            }
            s
        }
        Format::Ascii => {
            let mut s = String::new();
            for r in &reports {
                let tag = if r.passed() { "PASS" } else { "FAIL" };
                s.push_str(&format!(
                    "{tag}  {:<40} {:<20} checked {:>6}  failures {}\n",
                    r.identity_id,
                    ranges_text(r),
                    r.checked,
                    r.failures.len()
                ));
                for f in &r.failures {
                    s.push_str(&format!(
                        "      {}: lhs = {}, rhs = {}\n",
                        params_text(&f.params),
                        f.lhs,
                        f.rhs
                    ));
                }
            }
            s.push_str(&format!(
                "{} identities, {} failures\n",
                reports.len(),
                failures
            ));
            s
        }
    };
    Outcome {
        stdout: out,
        stderr: None,
        code: if failures == 0 { EXIT_OK } else { EXIT_FAILURE },
    }
}

// ---------------------------------------------------------------------------

pub fn tables(args: &TablesArgs, format: Format) -> Outcome {
    if args.braid && (args.which == 1 || format != Format::Ascii) {
        return Outcome {
            stdout: String::new(),
            stderr: Some("error: --braid needs --format ascii and a table from 2 to 4\n".into()),
            code: EXIT_USAGE,
        };
    }
    let t = table(args.which).expect("which is validated to 1..=4");
    let header: Vec<String> = std::iter::once(t.index_name.clone())
        .chain(t.columns.iter().map(ToString::to_string))
        .collect();
    let rows: Vec<Vec<String>> = t
        .rows
        .iter()
        .map(|r| [vec![r.label.clone()], strings(&r.values)].concat())
        .collect();
    let out = match format {
        Format::Json => json(&t),
        Format::Csv => {
            let mut s = csv_line(&header);
            for row in &rows {
                s.push_str(&csv_line(row));
            }
            s
        }
        Format::Ascii => {
            let mut s = ascii_grid(&header, &rows);
            if args.braid {
                for row in &t.rows {
                    s.push('\n');
                    s.push_str(&braid(row.kind, &row.label, &t.columns));
                }
            }
            s
        }
    };
    Outcome::ok(out)
}

/// Two-row picture: for each k, the index of the P or Q term the closed form
/// is built from, placed in that term's row.
fn braid(kind: SequenceKind, label: &str, columns: &[usize]) -> String {
    let mut p_row = vec!["P".to_owned()];
    let mut q_row = vec!["Q".to_owned()];
    for &k in columns {
        let source =
            curl_source(CurlQuery::new(kind, k, 1)).expect("m = 1 always has a closed form");
        let (p, q) = match source {
            CurlSource::Pell(i) => (i.to_string(), "·".to_owned()),
            CurlSource::AssociatedPell(i) => ("·".to_owned(), i.to_string()),
            CurlSource::One => ("·".to_owned(), "·".to_owned()),
        };
        p_row.push(p);
        q_row.push(q);
    }
    let header: Vec<String> = std::iter::once(format!("{label} from"))
        .chain(columns.iter().map(|k| format!("k={k}")))
        .collect();
    ascii_grid(&header, &[p_row, q_row])
}

// ---------------------------------------------------------------------------

pub fn scan_conjecture(args: &ScanArgs, format: Format) -> Outcome {
    let findings = conjecture_scan(args.max_k);
    let counterexamples: Vec<u64> = findings
        .iter()
        .filter(|f| f.is_counterexample())
        .map(|f| f.k)
        .collect();
    let summary = format!(
        "scanned k = 1..{}: {} findings, {} counterexamples{}\n",
        args.max_k,
        findings.len(),
        counterexamples.len(),
        if counterexamples.is_empty() {
            String::new()
        } else {
            format!(
                " (k = {})",
                counterexamples
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        }
    );
    let witnesses_text = |f: &pellbraid::ConjectureFinding| {
        f.witnesses
            .iter()
            .map(|w| format!("{}:{}", w.p, w.entry))
            .collect::<Vec<_>>()
            .join(";")
    };
    let (stdout, stderr) = match format {
        Format::Json => (json(&findings), Some(summary)),
        Format::Csv => {
            let mut s = csv_line(&["k", "gcd_qk_k", "witnesses", "holds"]);
            for f in &findings {
                s.push_str(&csv_line(&[
                    f.k.to_string(),
                    f.gcd_qk_k.to_string(),
                    witnesses_text(f),
                    f.biconditional_holds.to_string(),
                ]));
            }
            (s, Some(summary))
        }
        Format::Ascii => {
            let mut s = String::new();
            for f in &findings {
                let verdict = if f.biconditional_holds {
                    "holds"
                } else {
                    "COUNTEREXAMPLE"
                };
                let w = witnesses_text(f);
                s.push_str(&format!(
                    "k={:<6} gcd(Q_k,k)={:<8} witnesses (p:e_Q(p))=[{}] {}\n",
                    f.k, f.gcd_qk_k, w, verdict
                ));
            }
            s.push_str(&summary);
            (s, None)
        }
    };
    Outcome {
        stdout,
        stderr,
        code: if counterexamples.is_empty() {
            EXIT_OK
        } else {
            EXIT_COUNTEREXAMPLE
        },
    }
}
