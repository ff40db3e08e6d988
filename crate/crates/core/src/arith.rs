use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// `numerator / divisor`, failing if the division leaves a remainder.
pub(crate) fn exact_div(numerator: BigInt, divisor: u32, what: &'static str) -> Result<BigInt> {
    let (q, r) = numerator.div_rem(&BigInt::from(divisor));
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::Inexact {
            what,
            numerator: numerator.to_string(),
            divisor,
        })
    }
}

/// Non-negative gcd with `gcd(0, a) = |a|`.
pub fn gcd(a: &BigInt, b: &BigInt) -> BigInt {
    a.gcd(b).abs()
}

pub(crate) fn parity_sign(k: usize) -> BigInt {
    if k % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}
