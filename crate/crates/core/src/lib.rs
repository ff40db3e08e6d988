//! Exact arithmetic for the Pell, associated Pell, balancing,
//! Lucas-balancing, cobalancing and Lucas-cobalancing sequences.
//!
//! The crate computes, for each sequence `S`, the GCD of all sums of `k`
//! consecutive terms,
//!
//! ```text
//! 𝒮(k) = gcd( Σ_{i=1..k} S_{n+i}  :  n ≥ 0 )
//! ```
//!
//! in two independent ways: a closed form built from Pell and associated Pell
//! numbers ([`closed_forms`]), and a brute-force fold over a finite horizon of
//! offsets ([`oracle`]). The supporting identities are checked numerically in
//! [`identities`] and [`padic`].
//!
//! ```
//! use pellbraid::{curl_closed, curl_oracle, CurlQuery, SequenceKind};
//!
//! let q = CurlQuery::new(SequenceKind::AssociatedPell, 6, 1);
//! assert_eq!(curl_closed(q).unwrap(), 14.into());
//! assert_eq!(curl_oracle(q.kind, q.k, q.m, 64).value, 14.into());
//! ```

mod arith;
pub mod closed_forms;
pub mod decimal;
pub mod error;
pub mod identities;
pub mod oracle;
pub mod padic;
pub mod sequences;
pub mod tables;

/// Arbitrary-precision signed integer used for every term, sum and gcd.
pub type Integer = num_bigint::BigInt;

pub use arith::gcd;
pub use closed_forms::{
    curl_b_intermediary, curl_closed, curl_source, gcd_report, observation_check, CurlQuery,
    CurlSource, GcdReport, Observation, ObservationOutcome,
};
pub use error::{Error, Result};
pub use identities::{Failure, IdentityReport, ParamRange};
pub use oracle::{curl_oracle, power_sum, OracleResult, DEFAULT_HORIZON};
pub use padic::{conjecture_scan, entry_point, nu, ConjectureFinding, EntryPointRecord, Witness};
pub use sequences::{gamma_power, term, terms, QuadraticInt, SequenceKind, SequenceTable};
pub use tables::{table, Table, TableRow};
