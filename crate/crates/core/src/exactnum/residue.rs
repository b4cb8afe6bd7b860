use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::todd::inverse_power_coefficients;
use crate::{Error, Result};

/// Laurent series with integer numerators over one common denominator.
///
/// Keeps the inner loops of constant-term extraction free of gcd work; the
/// content is divided out once per operation instead of once per coefficient.
#[derive(Clone, Debug)]
struct ScaledSeries {
    start: i64,
    num: Vec<BigInt>,
    den: BigInt,
}

impl ScaledSeries {
    fn order(&self) -> i64 {
        self.start + self.num.len() as i64 - 1
    }

    fn at(&self, power: i64) -> Option<&BigInt> {
        if power < self.start {
            None
        } else {
            self.num.get((power - self.start) as usize)
        }
    }

    fn reduce(mut self) -> Self {
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
        self
    }

    /// Product truncated at `order` (and at the natural truncation order).
    fn mul(&self, other: &ScaledSeries, order: i64) -> ScaledSeries {
        let start = self.start + other.start;
        let order = order.min(self.order() + other.start).min(other.order() + self.start);
        let len = (order - start + 1).max(0) as usize;
        let mut num = vec![BigInt::zero(); len];
        for (i, a) in self.num.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate().take(len - i) {
                if !b.is_zero() {
                    num[i + j] += a * b;
                }
            }
        }
        ScaledSeries { start, num, den: &self.den * &other.den }.reduce()
    }

    /// Coefficient of `s^power` in the product, as a fraction.
    fn product_coefficient(&self, other: &ScaledSeries, power: i64) -> BigRational {
        let mut acc = BigInt::zero();
        for (i, a) in self.num.iter().enumerate() {
            let p = self.start + i as i64;
            if let Some(b) = other.at(power - p) {
                acc += a * b;
            }
        }
        BigRational::new(acc, &self.den * &other.den)
    }

    /// `Σ coef_i · series_i`, truncated at `order`.
    fn combination(items: &[(&BigRational, &ScaledSeries)], order: i64) -> ScaledSeries {
        let mut den = BigInt::one();
        for (c, s) in items {
            den = den.lcm(&(c.denom() * &s.den));
        }
        let start = items.iter().map(|(_, s)| s.start).min().unwrap_or(0);
        let order = items.iter().map(|(_, s)| s.order()).fold(order, i64::min);
        let len = (order - start + 1).max(0) as usize;
        let mut num = vec![BigInt::zero(); len];
        for (c, s) in items {
            let factor = c.numer() * (&den / (c.denom() * &s.den));
            let offset = (s.start - start) as usize;
            for (i, v) in s.num.iter().enumerate() {
                if offset + i >= len {
                    break;
                }
                if !v.is_zero() {
                    num[offset + i] += &factor * v;
                }
            }
        }
        ScaledSeries { start, num, den }.reduce()
    }

    /// `exp(w·s)` up to `order`.
    fn exp(w: &BigInt, order: i64) -> ScaledSeries {
        let n = order.max(0) as usize;
        // w^i / i! = w^i · (n!/i!) / n!
        let mut tail = vec![BigInt::one(); n + 1];
        for i in (0..n).rev() {
            tail[i] = &tail[i + 1] * BigInt::from(i + 1);
        }
        let mut power = BigInt::one();
        let mut num = Vec::with_capacity(n + 1);
        for t in &tail {
            num.push(&power * t);
            power *= w;
        }
        let den = tail[0].clone();
        ScaledSeries { start: 0, num, den }.reduce()
    }
}

/// One summand `coefficient · e^{shift·s} · Π_j (1 - e^{c_j s})^{-m_j}` of a
/// group sharing the pairings `c_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTermEntry {
    pub multiplicities: Vec<u32>,
    pub shift: BigInt,
    pub coefficient: BigRational,
}

/// Extracts constant terms of exponential–rational expressions in one variable.
///
/// The expressions are what a generating function becomes after substituting
/// `z = e^{λ s}`: every monomial `z^a` turns into `e^{⟨λ,a⟩ s}` and every
/// denominator factor `(1 - z^v)^{-m}` into `(1 - e^{⟨λ,v⟩ s})^{-m}`. The
/// value at `z = 1` is the constant term in `s`.
///
/// Entries sharing the same pairings are summed factor by factor: the last
/// factor is contracted first, so each distinct prefix of multiplicities is
/// multiplied out once.
#[derive(Debug, Default)]
pub struct ConstantTermEngine {
    inverse_powers: HashMap<u32, (i64, ScaledSeries)>,
}

impl ConstantTermEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `(1 - e^x)^{-m}` in `x`, known at least up to `order`.
    fn unit_power(&mut self, m: u32, order: i64) -> &ScaledSeries {
        let stale = self.inverse_powers.get(&m).map_or(true, |(o, _)| *o < order);
        if stale {
            let order = order.max(16);
            let coeffs = inverse_power_coefficients(m, order);
            let mut den = BigInt::one();
            for c in &coeffs {
                den = den.lcm(c.denom());
            }
            let num = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
            let series = ScaledSeries { start: -(m as i64), num, den };
            self.inverse_powers.insert(m, (order, series));
        }
        &self.inverse_powers[&m].1
    }

    /// `(1 - e^{c s})^{-m}` in `s` up to `order`; `m = 0` gives `1`.
    fn factor_power(&mut self, c: &BigInt, m: u32, order: i64) -> ScaledSeries {
        if m == 0 {
            let mut num = vec![BigInt::zero(); (order + 1).max(1) as usize];
            num[0] = BigInt::one();
            return ScaledSeries { start: 0, num, den: BigInt::one() };
        }
        let base = self.unit_power(m, order);
        let len = (order + m as i64 + 1).max(0) as usize;
        // coefficient of s^k is a_k c^k; scale everything by c^m to stay integral.
        let mut num = Vec::with_capacity(len);
        let mut power = BigInt::one();
        for a in base.num.iter().take(len) {
            num.push(a * &power);
            power *= c;
        }
        let mut den = &base.den * c.pow(m);
        if den.is_negative() {
            den = -den;
            for v in &mut num {
                *v = -&*v;
            }
        }
        ScaledSeries { start: -(m as i64), num, den }.reduce()
    }

    /// `Σ_e coefficient_e · CT_s[e^{shift_e s} Π_j (1 - e^{c_j s})^{-m_{e,j}}]`.
    pub fn constant_term_sum(
        &mut self,
        pairings: &[BigInt],
        entries: &[ConstantTermEntry],
    ) -> Result<BigRational> {
        let d = pairings.len();
        for e in entries {
            if e.multiplicities.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: e.multiplicities.len() });
            }
            for (c, m) in pairings.iter().zip(&e.multiplicities) {
                if *m > 0 && c.is_zero() {
                    return Err(Error::DegenerateDirection);
                }
            }
        }
        if entries.is_empty() {
            return Ok(BigRational::zero());
        }
        if d == 0 {
            return Ok(entries.iter().map(|e| e.coefficient.clone()).sum());
        }

        // Innermost level: group by full multiplicity vector, then by shift.
        // prefix (first d-1 multiplicities) -> shift -> last multiplicity -> coefficient
        let mut inner: BTreeMap<Vec<u32>, BTreeMap<BigInt, BTreeMap<u32, BigRational>>> =
            BTreeMap::new();
        for e in entries {
            let (prefix, last) = e.multiplicities.split_at(d - 1);
            *inner
                .entry(prefix.to_vec())
                .or_default()
                .entry(e.shift.clone())
                .or_default()
                .entry(last[0])
                .or_insert_with(BigRational::zero) += &e.coefficient;
        }

        let mut level: BTreeMap<Vec<u32>, ScaledSeries> = BTreeMap::new();
        let mut total = BigRational::zero();
        for (prefix, by_shift) in &inner {
            let need: i64 = prefix.iter().map(|&m| m as i64).sum();
            let mut parts = Vec::new();
            for (shift, by_m) in by_shift {
                let powers: Vec<(BigRational, ScaledSeries)> = by_m
                    .iter()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(&m, c)| (c.clone(), self.factor_power(&pairings[d - 1], m, need)))
                    .collect();
                if powers.is_empty() {
                    continue;
                }
                let refs: Vec<_> = powers.iter().map(|(c, s)| (c, s)).collect();
                let comb = ScaledSeries::combination(&refs, need);
                let exp = ScaledSeries::exp(shift, need - comb.start);
                if d == 1 {
                    total += comb.product_coefficient(&exp, 0);
                } else {
                    parts.push(comb.mul(&exp, need));
                }
            }
            if d > 1 && !parts.is_empty() {
                let one = BigRational::one();
                let refs: Vec<_> = parts.iter().map(|s| (&one, s)).collect();
                level.insert(prefix.clone(), ScaledSeries::combination(&refs, need));
            }
        }
        if d == 1 {
            return Ok(total);
        }

        // Remaining factors, last to first.
        for j in (0..d - 1).rev() {
            let mut grouped: BTreeMap<Vec<u32>, Vec<(u32, ScaledSeries)>> = BTreeMap::new();
            for (prefix, series) in level {
                let (head, last) = prefix.split_at(j);
                grouped.entry(head.to_vec()).or_default().push((last[0], series));
            }
            let mut next = BTreeMap::new();
            for (head, items) in grouped {
                let need: i64 = head.iter().map(|&m| m as i64).sum();
                if j == 0 {
                    for (m, series) in &items {
                        let f = self.factor_power(&pairings[0], *m, -series.start);
                        total += f.product_coefficient(series, 0);
                    }
                    continue;
                }
                let mut parts = Vec::with_capacity(items.len());
                for (m, series) in &items {
                    let f = self.factor_power(&pairings[j], *m, need - series.start);
                    parts.push(f.mul(series, need));
                }
                let one = BigRational::one();
                let refs: Vec<_> = parts.iter().map(|s| (&one, s)).collect();
                next.insert(head, ScaledSeries::combination(&refs, need));
            }
            level = next;
        }
        Ok(total)
    }
}
