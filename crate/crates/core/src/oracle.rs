//! Brute-force ground truth: scans the bounding box point by point.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::genfun::Polynomial;
use crate::geometry::Polytope;
use crate::{Error, Result};

/// Cap on the number of box points scanned.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationBudget {
    max_points: u64,
}

impl EnumerationBudget {
    pub fn new(max_points: u64) -> Result<Self> {
        if max_points == 0 {
            return Err(Error::InvalidParameter("enumeration budget must be positive".into()));
        }
        Ok(EnumerationBudget { max_points })
    }

    pub fn max_points(&self) -> u64 {
        self.max_points
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_points: 10_000_000 }
    }
}

/// All lattice points of `p` in lexicographic order.
pub fn enumerate(p: &Polytope, budget: EnumerationBudget) -> Result<Vec<Vec<BigInt>>> {
    let bbox = match p.bounding_box() {
        Ok(b) => b,
        Err(Error::EmptyFeasibleSet) => return Ok(Vec::new()),
        Err(e) => return Err(e),
    };
    let volume = bbox.volume();
    if volume > BigInt::from(budget.max_points) {
        return Err(Error::BudgetExceeded { volume, budget: budget.max_points });
    }
    let d = p.dim();
    let mut out = Vec::new();
    let mut x = bbox.lower.clone();
    loop {
        if p.contains(&x)? {
            out.push(x.clone());
        }
        let mut i = d;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if x[i] < bbox.upper[i] {
                x[i] += 1;
                break;
            }
            x[i] = bbox.lower[i].clone();
        }
    }
}

/// `Σ_{α ∈ P ∩ Z^d} f(α)^k`.
pub fn brute_power_sum(p: &Polytope, f: &Polynomial, k: u32, budget: EnumerationBudget) -> Result<BigInt> {
    check_dim(p, f)?;
    Ok(enumerate(p, budget)?.iter().map(|a| f.eval(a).pow(k)).fold(BigInt::zero(), |s, v| s + v))
}

/// Largest value and its lexicographically least maximizer.
pub fn brute_max(p: &Polytope, f: &Polynomial, budget: EnumerationBudget) -> Result<(BigInt, Vec<BigInt>)> {
    extreme(p, f, budget, true)
}

/// Smallest value and its lexicographically least minimizer.
pub fn brute_min(p: &Polytope, f: &Polynomial, budget: EnumerationBudget) -> Result<(BigInt, Vec<BigInt>)> {
    extreme(p, f, budget, false)
}

/// Number of lattice points.
pub fn brute_count(p: &Polytope, budget: EnumerationBudget) -> Result<BigInt> {
    Ok(enumerate(p, budget)?.len().into())
}

fn extreme(p: &Polytope, f: &Polynomial, budget: EnumerationBudget, maximize: bool) -> Result<(BigInt, Vec<BigInt>)> {
    check_dim(p, f)?;
    let sign = if maximize { BigInt::one() } else { -BigInt::one() };
    let mut best: Option<(BigInt, Vec<BigInt>)> = None;
    for a in enumerate(p, budget)? {
        let v = f.eval(&a);
        if best.as_ref().map_or(true, |(b, _)| (&v - b) * &sign > BigInt::zero()) {
            best = Some((v, a));
        }
    }
    best.ok_or(Error::EmptyFeasibleSet)
}

fn check_dim(p: &Polytope, f: &Polynomial) -> Result<()> {
    if p.dim() != f.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: f.dim() });
    }
    Ok(())
}
