use num_bigint::BigInt;
use num_rational::BigRational;

use super::bounds::{BoundsReport, PowerSums};
use super::normalize::{normalize, ShiftInfo};
use crate::genfun::Polynomial;
use crate::geometry::Polytope;
use crate::{Error, Result};

/// When the exact loop may stop.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum StoppingRule {
    /// Only when `⌊U_k⌋ - ⌈L_k⌉ < 1`.
    MeanRoot,
    /// Also when the ratio bound `⌈S_k/S_{k-1}⌉` reaches `⌊U_k⌋`.
    #[default]
    MeanRootOrRatio,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactOptions {
    pub k_max: u32,
    pub rule: StoppingRule,
    /// Width of the root brackets kept in the trace.
    pub precision: BigRational,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            k_max: 64,
            rule: StoppingRule::default(),
            precision: BigRational::new(1.into(), BigInt::from(10).pow(12)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactStatus {
    /// The maximum of the original objective.
    Optimal(BigInt),
    /// `k_max` was reached; bounds on the original objective's maximum.
    Unconverged { lower: BigInt, upper: BigInt },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizeOutcome {
    pub status: ExactStatus,
    /// One report per `k` tried, in the working (possibly shifted) scale.
    pub trace: Vec<BoundsReport>,
    pub shift: ShiftInfo,
    pub count: BigInt,
}

impl OptimizeOutcome {
    pub fn value(&self) -> Option<&BigInt> {
        match &self.status {
            ExactStatus::Optimal(v) => Some(v),
            ExactStatus::Unconverged { .. } => None,
        }
    }

    /// The `k` at which the loop stopped.
    pub fn k_final(&self) -> u32 {
        self.trace.last().map_or(0, |r| r.k)
    }
}

/// Raises `k` until the integer bounds pin down the maximum of `f` over the
/// lattice points of `p`.
pub fn optimize_exact(p: &Polytope, f: &Polynomial, known_nonnegative: bool, k_max: u32) -> Result<OptimizeOutcome> {
    optimize_exact_with(p, f, known_nonnegative, &ExactOptions { k_max, ..ExactOptions::default() })
}

pub fn optimize_exact_with(
    p: &Polytope,
    f: &Polynomial,
    known_nonnegative: bool,
    options: &ExactOptions,
) -> Result<OptimizeOutcome> {
    if options.k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    let (fbar, shift) = normalize(p, f, known_nonnegative)?;
    let mut sums = PowerSums::new(p, &fbar)?;
    let offset = shift.offset();
    let mut trace = Vec::new();
    for k in 1..=options.k_max {
        let report = sums.report(k, &options.precision)?;
        let done = match options.rule {
            StoppingRule::MeanRoot => report.converged,
            StoppingRule::MeanRootOrRatio => report.best_lower() >= report.floor_upper,
        };
        let optimum = &report.floor_upper + &offset;
        trace.push(report);
        if done {
            return Ok(OptimizeOutcome { status: ExactStatus::Optimal(optimum), trace, shift, count: sums.count().clone() });
        }
    }
    let last = trace.last().expect("k_max >= 1");
    let status = ExactStatus::Unconverged { lower: last.best_lower() + &offset, upper: &last.floor_upper + &offset };
    Ok(OptimizeOutcome { status, trace, shift, count: sums.count().clone() })
}
