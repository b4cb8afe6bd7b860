//! Exact numeric kernel.
//!
//! Everything downstream is computed with arbitrary-precision integers and
//! reduced rationals. This module adds the three pieces the rest of the crate
//! needs on top of them: truncated Laurent series in one formal variable, the
//! Taylor coefficients of `x / (e^x - 1)` (shared by every specialization at
//! `z = 1`), and k-th roots that are certified by exact integer comparisons.

mod residue;
mod roots;
mod series;
mod todd;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use residue::{ConstantTermEngine, ConstantTermEntry};
pub use roots::{
    integer_kth_root_ceil, integer_kth_root_floor, rational_kth_root_interval,
    round_to_decimal, RootInterval,
};
pub use series::{series_exp, series_inv_one_minus_exp, TruncatedSeries};
pub use todd::todd_coefficients;

use num_traits::{One, Zero};

/// `n / d` as a reduced rational. Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"p"`, `"-p"` or `"p/q"` exactly. Returns `None` on malformed input
/// or a zero denominator.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Parses a plain decimal such as `"-12.034"` exactly.
pub fn parse_decimal(text: &str) -> Option<BigRational> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text.strip_prefix('+').unwrap_or(text)),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{whole}{frac}").parse().ok()?;
    let value = BigRational::new(digits, BigInt::from(10).pow(frac.len() as u32));
    Some(if negative { -value } else { value })
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
