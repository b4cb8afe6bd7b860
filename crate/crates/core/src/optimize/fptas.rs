use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::bounds::{BoundsReport, PowerSums};
use super::normalize::{normalize, ShiftInfo};
use crate::genfun::Polynomial;
use crate::geometry::Polytope;
use crate::{Error, Result};

/// `k = ⌈(1 + 1/ε) ln N⌉`, at least 1. Values within floating-point noise of
/// an integer are rounded up past it so the bound is never undershot.
pub fn fptas_k(count: &BigInt, epsilon: &BigRational) -> Result<u32> {
    check_epsilon(epsilon)?;
    if !count.is_positive() {
        return Err(Error::EmptyFeasibleSet);
    }
    let ln_n = ln_bigint(count);
    let eps = epsilon.to_f64().ok_or(Error::InvalidEpsilon)?;
    let x = (1.0 + 1.0 / eps) * ln_n;
    if !x.is_finite() || x > f64::from(u32::MAX - 1) {
        return Err(Error::InvalidParameter(format!("k = {x} is out of range")));
    }
    let nearest = x.round();
    let k = if (x - nearest).abs() <= 1e-9 * nearest.max(1.0) { nearest + 1.0 } else { x.ceil() };
    Ok((k as u32).max(1))
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top: BigInt = n >> shift;
    top.to_f64().unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

fn check_epsilon(epsilon: &BigRational) -> Result<()> {
    if !epsilon.is_positive() || epsilon > &BigRational::one() {
        return Err(Error::InvalidEpsilon);
    }
    Ok(())
}

/// How to treat an objective that may take negative values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FptasMode {
    /// The caller asserts `f ≥ 0` on the lattice points.
    AssumeNonnegative,
    /// Work with `f - L` and report in that scale.
    Shift,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptasResult {
    pub epsilon: BigRational,
    pub k_used: u32,
    pub count: BigInt,
    /// Bounds at `k_used`, in the working scale; `report.lower` is the
    /// `L_k ≥ (1 - ε) f̄*` guarantee.
    pub report: BoundsReport,
    /// A lattice point with working-scale value at least `L_k`.
    pub certified_point: Option<Vec<BigInt>>,
    pub certified_value: Option<BigInt>,
    pub shift: ShiftInfo,
}

/// Computes `L_k` at `k = fptas_k(N, ε)`, which satisfies
/// `(1 - ε) f̄* ≤ L_k ≤ f̄*`, and optionally a point attaining it.
pub fn fptas(p: &Polytope, f: &Polynomial, epsilon: &BigRational, mode: FptasMode, recover: bool) -> Result<FptasResult> {
    check_epsilon(epsilon)?;
    let (fbar, shift) = normalize(p, f, mode == FptasMode::AssumeNonnegative)?;
    let mut sums = PowerSums::new(p, &fbar)?;
    let count = sums.count().clone();
    let k = fptas_k(&count, epsilon)?;
    if k > 1 {
        sums.power_sum(k - 1)?;
    }
    let precision = BigRational::new(BigInt::one(), BigInt::from(10).pow(12));
    let report = sums.report(k, &precision)?;
    let (certified_point, certified_value) = if recover {
        let (x, v) = recover_point(p, &fbar, k)?;
        (Some(x), Some(v))
    } else {
        (None, None)
    };
    Ok(FptasResult { epsilon: epsilon.clone(), k_used: k, count, report, certified_point, certified_value, shift })
}

/// Mean of `f̄^k` over the lattice points in `p ∩ box`, or `None` when there
/// are none. Slabs are widened by 1/2 so the subpolytope stays full
/// dimensional whenever it holds a lattice point.
fn box_mean(p: &Polytope, f: &Polynomial, lower: &[BigInt], upper: &[BigInt], k: u32) -> Result<Option<(BigInt, BigInt)>> {
    let d = p.dim();
    let mut rows = Vec::with_capacity(2 * d);
    let mut rhs = Vec::with_capacity(2 * d);
    for i in 0..d {
        let mut e = vec![BigInt::zero(); d];
        e[i] = BigInt::from(2);
        rows.push(e.clone());
        rhs.push(&upper[i] * 2 + BigInt::one());
        e[i] = BigInt::from(-2);
        rows.push(e);
        rhs.push(BigInt::one() - &lower[i] * 2);
    }
    let sub = p.with_constraints(rows, rhs)?;
    let mut sums = match PowerSums::new(&sub, f) {
        Ok(s) => s,
        Err(Error::LowerDimensional | Error::EmptyFeasibleSet) => return Ok(None),
        Err(e) => return Err(e),
    };
    let n = sums.count().clone();
    Ok(Some((sums.power_sum(k)?, n)))
}

/// Bisects the bounding box, always keeping the half whose mean of `f̄^k` is
/// larger (the lower half on ties), until one lattice point remains. Its value
/// is at least `(S_k/N)^{1/k}`.
pub fn recover_point(p: &Polytope, fbar: &Polynomial, k: u32) -> Result<(Vec<BigInt>, BigInt)> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let bbox = p.bounding_box()?;
    let d = p.dim();
    let mut lower = bbox.lower.clone();
    let mut upper = bbox.upper.clone();
    if box_mean(p, fbar, &lower, &upper, k)?.is_none() {
        return Err(Error::EmptyFeasibleSet);
    }
    let mut axis = 0;
    loop {
        let Some(i) = (0..d).map(|j| (axis + j) % d).find(|&j| lower[j] < upper[j]) else {
            break;
        };
        axis = (i + 1) % d;
        let mid: BigInt = (&lower[i] + &upper[i]).div_floor(&BigInt::from(2));
        let mut lo_upper = upper.clone();
        lo_upper[i] = mid.clone();
        let mut hi_lower = lower.clone();
        hi_lower[i] = mid + 1;
        let left = box_mean(p, fbar, &lower, &lo_upper, k)?;
        let right = box_mean(p, fbar, &hi_lower, &upper, k)?;
        let take_right = match (&left, &right) {
            (None, None) => return Err(Error::Internal("bisection lost every lattice point".into())),
            (None, Some(_)) => true,
            (Some(_), None) => false,
            (Some((s1, n1)), Some((s2, n2))) => s2 * n1 > s1 * n2,
        };
        if take_right {
            lower = hi_lower;
        } else {
            upper = lo_upper;
        }
    }
    let value = fbar.eval(&lower);
    Ok((lower, value))
}
