use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::barvinok::barvinok_decompose;
use super::simplicial::{ConeTerm, TieBreak};
use super::triangulate::triangulate;
use crate::exactnum::{ConstantTermEngine, ConstantTermEntry};
use crate::geometry::linalg::dot;
use crate::geometry::Polytope;
use crate::{Error, Result};

/// `Σ_i sign_i · z^{u_i} / Π_j (1 - z^{v_ij})`, a short rational encoding of
/// `Σ_{α ∈ P ∩ Z^d} z^α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunctionSum {
    pub dim: usize,
    pub terms: Vec<ConeTerm>,
}

impl RationalFunctionSum {
    pub fn empty(dim: usize) -> Self {
        RationalFunctionSum { dim, terms: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// All denominator rays, for choosing a specialization direction.
    pub fn rays(&self) -> impl Iterator<Item = &Vec<BigInt>> + Clone {
        self.terms.iter().flat_map(|t| t.rays.iter())
    }
}

/// Generating function of the lattice points of `p` via Brion's theorem: the
/// sum over vertices of the signed unimodular decompositions of the tangent
/// cones.
pub fn generating_function(p: &Polytope) -> Result<RationalFunctionSum> {
    let vertices = p.pipeline_vertices()?;
    let mut terms = Vec::new();
    for v in &vertices {
        let cone = p.tangent_cone(v)?;
        let mut interior = vec![BigInt::zero(); p.dim()];
        for g in &cone.generators {
            for (acc, x) in interior.iter_mut().zip(g) {
                *acc += x;
            }
        }
        let tie = TieBreak::new(interior);
        for simplex in triangulate(&cone, &tie)? {
            for unimodular in barvinok_decompose(&simplex)? {
                terms.push(unimodular.unimodular_term()?);
            }
        }
    }
    Ok(RationalFunctionSum { dim: p.dim(), terms })
}

/// `(1, t, t², …, t^{d-1})`.
pub fn moment_direction(dim: usize, t: u64) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(dim);
    let mut x = BigInt::one();
    for _ in 0..dim {
        out.push(x.clone());
        x *= t;
    }
    out
}

/// The `skip`-th (from zero) point `λ` on the moment curve, `t = 1, 2, …`, with
/// `⟨λ, v⟩ ≠ 0` for every given ray. Each ray rules out at most `d - 1`
/// values of `t`, so the search terminates.
pub fn generic_direction<'a>(dim: usize, rays: impl Iterator<Item = &'a Vec<BigInt>> + Clone, skip: usize) -> Vec<BigInt> {
    let mut found = 0;
    let mut t = 1u64;
    loop {
        let lambda = moment_direction(dim, t);
        if rays.clone().all(|v| !dot(&lambda, v).is_zero()) {
            if found == skip {
                return lambda;
            }
            found += 1;
        }
        t += 1;
    }
}

/// Number of lattice points encoded by `g`, i.e. its value at `z = 1`.
pub fn specialize_count(g: &RationalFunctionSum) -> Result<BigInt> {
    let lambda = generic_direction(g.dim, g.rays(), 0);
    specialize_count_with(g, &lambda)
}

/// `specialize_count` along a caller-chosen direction `λ`.
pub fn specialize_count_with(g: &RationalFunctionSum, lambda: &[BigInt]) -> Result<BigInt> {
    let mut groups: BTreeMap<Vec<BigInt>, Vec<ConstantTermEntry>> = BTreeMap::new();
    for t in &g.terms {
        let mut pairings: Vec<BigInt> = t.rays.iter().map(|v| dot(lambda, v)).collect();
        pairings.sort();
        groups.entry(pairings).or_default().push(ConstantTermEntry {
            multiplicities: vec![1; t.rays.len()],
            shift: dot(lambda, &t.u),
            coefficient: BigRational::from_integer(t.sign.to_bigint()),
        });
    }
    let mut engine = ConstantTermEngine::new();
    let mut total = BigRational::zero();
    for (pairings, entries) in &groups {
        total += engine.constant_term_sum(pairings, entries)?;
    }
    if !total.is_integer() {
        return Err(Error::Internal(format!("lattice point count {total} is not an integer")));
    }
    Ok(total.to_integer())
}
