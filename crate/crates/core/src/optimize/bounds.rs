use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::conedecomp::{generating_function, specialize_count};
use crate::exactnum::{integer_kth_root_ceil, integer_kth_root_floor, rational_kth_root_interval, RootInterval};
use crate::genfun::{lift, specialize_at_one, GeneralizedTermSum, Polynomial, PowerApplier};
use crate::geometry::Polytope;
use crate::{Error, Result};

/// The bounds at one `k`: `L_k = (S_k/N)^{1/k} ≤ f̄* ≤ U_k = S_k^{1/k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub k: u32,
    /// `N`, the number of lattice points.
    pub count: BigInt,
    /// `S_k = Σ f̄(α)^k`.
    pub power_sum: BigInt,
    pub lower: RootInterval,
    pub upper: RootInterval,
    /// `⌊U_k⌋`, the largest `n` with `n^k ≤ S_k`.
    pub floor_upper: BigInt,
    /// `⌈L_k⌉`, the smallest `n` with `n^k N ≥ S_k`.
    pub ceil_lower: BigInt,
    /// `⌈S_k / S_{k-1}⌉` (with `S_0 = N`), also a lower bound on the integer
    /// optimum since `S_k ≤ f̄* S_{k-1}`.
    pub ratio_lower: Option<BigInt>,
    /// `⌊U_k⌋ - ⌈L_k⌉ < 1`.
    pub converged: bool,
}

impl BoundsReport {
    /// Best integer lower bound on `f̄*` known at this `k`.
    pub fn best_lower(&self) -> BigInt {
        match &self.ratio_lower {
            Some(r) if r > &self.ceil_lower => r.clone(),
            _ => self.ceil_lower.clone(),
        }
    }
}

/// Power sums `S_k = Σ_{α ∈ P ∩ Z^d} f̄(α)^k` of one polytope and objective,
/// evaluated through the generating function and cached by `k`.
pub struct PowerSums {
    lifted: GeneralizedTermSum,
    f: Polynomial,
    count: BigInt,
    applier: PowerApplier,
    sums: Vec<Option<BigInt>>,
}

impl PowerSums {
    /// Errors with `EmptyFeasibleSet` when the polytope has no lattice point.
    pub fn new(p: &Polytope, f: &Polynomial) -> Result<Self> {
        if p.dim() != f.dim() {
            return Err(Error::DimensionMismatch { expected: p.dim(), found: f.dim() });
        }
        let g = generating_function(p)?;
        let count = specialize_count(&g)?;
        if count.is_zero() {
            return Err(Error::EmptyFeasibleSet);
        }
        let lifted = lift(&g);
        let applier = PowerApplier::new(&lifted, f);
        Ok(PowerSums { lifted, f: f.clone(), count, applier, sums: Vec::new() })
    }

    pub fn count(&self) -> &BigInt {
        &self.count
    }

    /// `S_k`; `S_0 = N`.
    pub fn power_sum(&mut self, k: u32) -> Result<BigInt> {
        if k == 0 {
            return Ok(self.count.clone());
        }
        let idx = k as usize;
        if let Some(Some(s)) = self.sums.get(idx) {
            return Ok(s.clone());
        }
        if k <= self.applier.k() {
            self.applier = PowerApplier::new(&self.lifted, &self.f);
        }
        let value = specialize_at_one(&self.applier.power(k))?;
        if !value.is_integer() {
            return Err(Error::Internal(format!("power sum {value} is not an integer")));
        }
        let value = value.to_integer();
        if self.sums.len() <= idx {
            self.sums.resize(idx + 1, None);
        }
        self.sums[idx] = Some(value.clone());
        Ok(value)
    }

    /// Bounds at `k`, roots bracketed to width `precision`.
    pub fn report(&mut self, k: u32, precision: &BigRational) -> Result<BoundsReport> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        let s = self.power_sum(k)?;
        if s.is_negative() {
            return Err(Error::InvalidParameter(format!(
                "power sum S_{k} = {s} is negative; the objective is not non-negative on the lattice points"
            )));
        }
        let prev = self.sums.get(k as usize - 1).cloned().flatten();
        let prev = if k == 1 { Some(self.count.clone()) } else { prev };
        Ok(make_report(k, &self.count, &s, prev.as_ref(), precision))
    }
}

pub(crate) fn make_report(
    k: u32,
    count: &BigInt,
    s: &BigInt,
    previous: Option<&BigInt>,
    precision: &BigRational,
) -> BoundsReport {
    let s_q = BigRational::from_integer(s.clone());
    let mean = BigRational::new(s.clone(), count.clone());
    let lower = rational_kth_root_interval(&mean, k, precision);
    let upper = rational_kth_root_interval(&s_q, k, precision);
    let floor_upper = integer_kth_root_floor(&s_q, k);
    let ceil_lower = integer_kth_root_ceil(&mean, k);
    let ratio_lower = previous
        .filter(|p| p.is_positive())
        .map(|p| BigRational::new(s.clone(), p.clone()).ceil().to_integer());
    let converged = &floor_upper - &ceil_lower < BigInt::from(1);
    BoundsReport {
        k,
        count: count.clone(),
        power_sum: s.clone(),
        lower,
        upper,
        floor_upper,
        ceil_lower,
        ratio_lower,
        converged,
    }
}

/// `L_k` and `U_k` for a non-negative objective `f̄`.
pub fn bounds(p: &Polytope, fbar: &Polynomial, k: u32, precision: &BigRational) -> Result<BoundsReport> {
    let mut sums = PowerSums::new(p, fbar)?;
    if k > 1 {
        sums.power_sum(k - 1)?;
    }
    sums.report(k, precision)
}
