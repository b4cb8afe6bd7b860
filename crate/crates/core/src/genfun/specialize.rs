use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::term::GeneralizedTermSum;
use crate::conedecomp::generic_direction;
use crate::exactnum::{ConstantTermEngine, ConstantTermEntry};
use crate::geometry::linalg::dot;
use crate::Result;

/// Value of `s` at `z = 1`, i.e. `Σ_α g(α)` for `s = Σ_α g(α) z^α`.
///
/// Substitutes `z = e^{λ s}` along the first moment-curve direction `λ` that
/// pairs nonzero with every ray and sums constant terms of the resulting
/// Laurent series.
pub fn specialize_at_one(s: &GeneralizedTermSum) -> Result<BigRational> {
    let lambda = generic_direction(s.dim, s.rays(), 0);
    specialize_at_one_with(s, &lambda)
}

/// `specialize_at_one` along a caller-chosen direction.
pub fn specialize_at_one_with(s: &GeneralizedTermSum, lambda: &[BigInt]) -> Result<BigRational> {
    // Terms over the same rays share their series expansions.
    let mut groups: BTreeMap<Vec<Vec<BigInt>>, Vec<ConstantTermEntry>> = BTreeMap::new();
    for t in &s.terms {
        let rays: Vec<Vec<BigInt>> = t.denominator.iter().map(|(v, _)| v.clone()).collect();
        let ms: Vec<u32> = t.denominator.iter().map(|(_, m)| *m).collect();
        let entries = groups.entry(rays).or_default();
        for (c, a) in &t.numerator {
            entries.push(ConstantTermEntry {
                multiplicities: ms.clone(),
                shift: dot(lambda, a),
                coefficient: c.clone(),
            });
        }
    }
    let mut engine = ConstantTermEngine::new();
    let mut total = BigRational::zero();
    for (rays, entries) in &groups {
        let pairings: Vec<BigInt> = rays.iter().map(|v| dot(lambda, v)).collect();
        total += engine.constant_term_sum(&pairings, entries)?;
    }
    Ok(total)
}
