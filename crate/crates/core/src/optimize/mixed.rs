use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::exact::{optimize_exact_with, ExactOptions, ExactStatus};
use super::fptas::{fptas, FptasMode};
use crate::genfun::Polynomial;
use crate::geometry::Polytope;
use crate::{Error, Result};

/// How each grid subproblem is solved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubproblemSolver {
    Exact { known_nonnegative: bool, options: ExactOptions },
    /// Reports the value of the recovered point.
    Fptas { epsilon: BigRational, mode: FptasMode },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedEntry {
    pub n: BigInt,
    /// Objective value on the grid, `max g_n / n^{D_c}`; for the approximate
    /// solver, the value at the recovered point.
    pub value: BigRational,
    /// The maximizer in original coordinates (continuous part divided by `n`),
    /// when one was recovered.
    pub point: Option<Vec<BigRational>>,
    /// `true` when the exact loop hit `k_max`; `value` is then an upper bound.
    pub unconverged: bool,
}

/// Maximizes `f` over the points of `p` whose `integer_vars` are integral and
/// whose other coordinates lie on the grid `(1/n) Z`, for each `n` given.
pub fn mixed_integer_sequence(
    p: &Polytope,
    f: &Polynomial,
    integer_vars: &[usize],
    grid: &[BigInt],
    solver: &SubproblemSolver,
) -> Result<Vec<MixedEntry>> {
    let d = p.dim();
    if f.dim() != d {
        return Err(Error::DimensionMismatch { expected: d, found: f.dim() });
    }
    if let Some(&bad) = integer_vars.iter().find(|&&i| i >= d) {
        return Err(Error::InvalidParameter(format!("variable index {bad} out of range")));
    }
    if grid.iter().any(|n| !n.is_positive()) {
        return Err(Error::InvalidParameter("grid resolutions must be positive".into()));
    }
    let continuous: Vec<usize> = (0..d).filter(|i| !integer_vars.contains(i)).collect();
    let degree = f.degree_in(&continuous);
    grid.iter()
        .map(|n| {
            let gamma = p.semi_dilate(n, &continuous)?;
            let g = f.semi_scale(n, &continuous);
            let scale = BigRational::from_integer(n.pow(degree));
            let unscale = |x: &[BigInt]| -> Vec<BigRational> {
                x.iter()
                    .enumerate()
                    .map(|(i, v)| {
                        let den = if continuous.contains(&i) { n.clone() } else { BigInt::one() };
                        BigRational::new(v.clone(), den)
                    })
                    .collect()
            };
            let (raw, point, unconverged) = match solver {
                SubproblemSolver::Exact { known_nonnegative, options } => {
                    let out = optimize_exact_with(&gamma, &g, *known_nonnegative, options)?;
                    match out.status {
                        ExactStatus::Optimal(v) => (v, None, false),
                        ExactStatus::Unconverged { upper, .. } => (upper, None, true),
                    }
                }
                SubproblemSolver::Fptas { epsilon, mode } => {
                    let out = fptas(&gamma, &g, epsilon, *mode, true)?;
                    let x = out.certified_point.expect("recovery requested");
                    (g.eval(&x), Some(unscale(&x)), false)
                }
            };
            Ok(MixedEntry { n: n.clone(), value: BigRational::from_integer(raw) / scale, point, unconverged })
        })
        .collect()
}
