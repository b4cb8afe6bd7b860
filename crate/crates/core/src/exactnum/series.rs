use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::todd::inverse_power_coefficients;
use crate::{Error, Result};

/// A Laurent series in one formal variable `s`, known exactly from order
/// `start` up to and including order `order`.
///
/// Coefficients above `order` are unknown, not zero; arithmetic propagates the
/// truncation order instead of reading past it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    start: i64,
    order: i64,
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Series with coefficients for `start, start+1, …`; the truncation order
    /// is `order`. Missing coefficients up to `order` are zero.
    pub fn new(start: i64, order: i64, mut coeffs: Vec<BigRational>) -> Self {
        let len = (order - start + 1).max(0) as usize;
        coeffs.resize(len, BigRational::zero());
        TruncatedSeries { start, order, coeffs }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficient of `s^power`. Panics when `power > order`, since that
    /// coefficient is not known.
    pub fn coefficient(&self, power: i64) -> BigRational {
        assert!(power <= self.order, "coefficient beyond truncation order");
        if power < self.start {
            BigRational::zero()
        } else {
            self.coeffs[(power - self.start) as usize].clone()
        }
    }

    pub fn truncate(&self, order: i64) -> TruncatedSeries {
        let order = order.min(self.order);
        let len = (order - self.start + 1).max(0) as usize;
        TruncatedSeries::new(self.start, order, self.coeffs[..len].to_vec())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let start = self.start + other.start;
        let order = (self.order + other.start).min(other.order + self.start);
        let len = (order - start + 1).max(0) as usize;
        let mut coeffs = vec![BigRational::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= len {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { start, order, coeffs }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let start = self.start.min(other.start);
        let order = self.order.min(other.order);
        let coeffs = (start..=order)
            .map(|p| self.coefficient(p) + other.coefficient(p))
            .collect();
        TruncatedSeries::new(start, order, coeffs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})*s^{}", self.start + i as i64)?;
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(s^{})", self.order + 1)
    }
}

/// Truncation of `exp(c·s)` to order `order`.
pub fn series_exp(c: &BigRational, order: u32) -> TruncatedSeries {
    let mut coeffs = Vec::with_capacity(order as usize + 1);
    let mut term = BigRational::one();
    coeffs.push(term.clone());
    for j in 1..=order {
        term = term * c / BigRational::from_integer(BigInt::from(j));
        coeffs.push(term.clone());
    }
    TruncatedSeries::new(0, order as i64, coeffs)
}

/// Laurent expansion of `(1 - e^{c·s})^{-m}` from order `-m` up to `order`.
///
/// The coefficients come from `(1 - e^x)^{-m}` in `x = c·s`, which equals
/// `((-1/x)·h(x))^m` with `h(x) = x/(e^x - 1)`.
pub fn series_inv_one_minus_exp(c: &BigRational, m: u32, order: i64) -> Result<TruncatedSeries> {
    if c.is_zero() {
        return Err(Error::DegenerateDirection);
    }
    let start = -(m as i64);
    if order < start {
        return Ok(TruncatedSeries::new(start, order, Vec::new()));
    }
    let base = inverse_power_coefficients(m, order);
    let mut power = c.pow(start as i32);
    let mut coeffs = Vec::with_capacity(base.len());
    for a in base {
        coeffs.push(a * &power);
        power *= c;
    }
    Ok(TruncatedSeries::new(start, order, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, ratio};

    fn coeffs(s: &TruncatedSeries) -> Vec<BigRational> {
        (s.start()..=s.order()).map(|p| s.coefficient(p)).collect()
    }

    #[test]
    fn exp_examples() {
        let e = series_exp(&int(0), 3);
        assert_eq!(coeffs(&e), vec![int(1), int(0), int(0), int(0)]);
        let e = series_exp(&int(1), 2);
        assert_eq!(coeffs(&e), vec![int(1), int(1), ratio(1, 2)]);
        let e = series_exp(&int(2), 3);
        assert_eq!(coeffs(&e), vec![int(1), int(2), int(2), ratio(4, 3)]);
    }

    #[test]
    fn inverse_examples() {
        let s = series_inv_one_minus_exp(&int(1), 1, 0).unwrap();
        assert_eq!((s.start(), coeffs(&s)), (-1, vec![int(-1), ratio(1, 2)]));
        let s = series_inv_one_minus_exp(&int(-1), 1, 1).unwrap();
        assert_eq!(coeffs(&s), vec![int(1), ratio(1, 2), ratio(1, 12)]);
        let s = series_inv_one_minus_exp(&int(1), 1, 1).unwrap();
        assert_eq!(s.coefficient(1), ratio(-1, 12));

        let sq = series_inv_one_minus_exp(&int(1), 2, 1).unwrap();
        assert_eq!(coeffs(&sq), vec![int(1), int(-1), ratio(5, 12), ratio(-1, 12)]);
        let m1 = series_inv_one_minus_exp(&int(1), 1, 1).unwrap();
        assert_eq!(m1.mul(&m1).truncate(0), sq.truncate(0));

        let cube = series_inv_one_minus_exp(&ratio(3, 2), 3, 2).unwrap();
        assert_eq!(
            coeffs(&cube),
            vec![
                ratio(-8, 27),
                ratio(2, 3),
                ratio(-2, 3),
                ratio(3, 8),
                ratio(-19, 160),
                ratio(9, 640)
            ]
        );
    }

    #[test]
    fn zero_direction_is_rejected() {
        assert_eq!(
            series_inv_one_minus_exp(&int(0), 1, 0),
            Err(Error::DegenerateDirection)
        );
    }

    #[test]
    fn product_truncates_to_the_smaller_order() {
        let a = series_exp(&int(1), 5);
        let b = series_inv_one_minus_exp(&int(1), 1, 2).unwrap();
        let p = a.mul(&b);
        assert_eq!((p.start(), p.order()), (-1, 2));
    }
}
