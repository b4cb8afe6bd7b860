use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::polynomial::Monomial;
use crate::conedecomp::RationalFunctionSum;
use crate::exactnum::format_rational;

/// Denominator factors `(v_j, m_j)` standing for `Π_j (1 - z^{v_j})^{m_j}`,
/// sorted by ray.
pub type Denominator = Vec<(Vec<BigInt>, u32)>;

/// `Σ_a c_a z^a / Π_j (1 - z^{v_j})^{m_j}`.
///
/// Numerator monomials are sorted by exponent with nonzero coefficients;
/// denominator rays are distinct and sorted, with multiplicities at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedTerm {
    pub numerator: Vec<(BigRational, Vec<BigInt>)>,
    pub denominator: Denominator,
}

impl GeneralizedTerm {
    pub fn pole_order(&self) -> u32 {
        self.denominator.iter().map(|(_, m)| m).sum()
    }
}

impl fmt::Display for GeneralizedTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        let num: Vec<String> = self
            .numerator
            .iter()
            .map(|(c, a)| format!("({}) z^({})", format_rational(c), exps(a)))
            .collect();
        let den: Vec<String> = self
            .denominator
            .iter()
            .map(|(v, m)| format!("(1 - z^({}))^{m}", exps(v)))
            .collect();
        write!(f, "[{}] / [{}]", num.join(" + "), den.join(" "))
    }
}

/// A finite sum of generalized terms in `dim` variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedTermSum {
    pub dim: usize,
    pub terms: Vec<GeneralizedTerm>,
}

impl GeneralizedTermSum {
    pub fn empty(dim: usize) -> Self {
        GeneralizedTermSum { dim, terms: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds numerators of terms with identical denominators and drops
    /// cancelled monomials and empty terms. The result is sorted by
    /// denominator, so equal sums merge to equal values.
    pub fn merged(self) -> GeneralizedTermSum {
        merge_terms(self.dim, self.terms)
    }

    pub fn rays(&self) -> impl Iterator<Item = &Vec<BigInt>> + Clone {
        self.terms.iter().flat_map(|t| t.denominator.iter().map(|(v, _)| v))
    }
}

pub(crate) fn merge_terms(dim: usize, terms: impl IntoIterator<Item = GeneralizedTerm>) -> GeneralizedTermSum {
    let mut by_den: BTreeMap<Denominator, BTreeMap<Vec<BigInt>, BigRational>> = BTreeMap::new();
    for t in terms {
        let num = by_den.entry(t.denominator).or_default();
        for (c, a) in t.numerator {
            *num.entry(a).or_insert_with(BigRational::zero) += c;
        }
    }
    let terms = by_den
        .into_iter()
        .filter_map(|(denominator, num)| {
            let numerator: Vec<_> = num.into_iter().filter(|(_, c)| !c.is_zero()).map(|(a, c)| (c, a)).collect();
            (!numerator.is_empty()).then_some(GeneralizedTerm { numerator, denominator })
        })
        .collect();
    GeneralizedTermSum { dim, terms }
}

/// Embeds `Σ E_i z^{u_i} / Π_j (1 - z^{v_ij})` with all multiplicities 1.
pub fn lift(g: &RationalFunctionSum) -> GeneralizedTermSum {
    let terms = g
        .terms
        .iter()
        .map(|t| {
            let mut denominator: Denominator = t.rays.iter().map(|v| (v.clone(), 1)).collect();
            denominator.sort();
            GeneralizedTerm {
                numerator: vec![(BigRational::from_integer(t.sign.to_bigint()), t.u.clone())],
                denominator,
            }
        })
        .collect();
    GeneralizedTermSum { dim: g.dim, terms }
}

/// `z_r ∂/∂z_r` applied to one term.
///
/// Uses `z^v (1 - z^v)^{-(m+1)} = (1 - z^v)^{-(m+1)} - (1 - z^v)^{-m}`, so the
/// numerator support never grows:
/// the same denominator carries coefficients `c_a (a_r - Σ_j m_j v_jr)`, and
/// each factor with `v_jr ≠ 0` contributes the numerator scaled by
/// `m_j v_jr` over the denominator with `m_j + 1`.
pub fn apply_euler_operator(t: &GeneralizedTerm, r: usize) -> Vec<GeneralizedTerm> {
    let mut out = Vec::with_capacity(t.denominator.len() + 1);
    let shift: BigInt = t.denominator.iter().map(|(v, m)| &v[r] * BigInt::from(*m)).sum();
    let numerator: Vec<_> = t
        .numerator
        .iter()
        .filter_map(|(c, a)| {
            let f = &a[r] - &shift;
            (!f.is_zero()).then(|| (c * BigRational::from_integer(f), a.clone()))
        })
        .collect();
    if !numerator.is_empty() {
        out.push(GeneralizedTerm { numerator, denominator: t.denominator.clone() });
    }
    for (j, (v, m)) in t.denominator.iter().enumerate() {
        if v[r].is_zero() {
            continue;
        }
        let f = BigRational::from_integer(&v[r] * BigInt::from(*m));
        let numerator = t.numerator.iter().map(|(c, a)| (c * &f, a.clone())).collect();
        let mut denominator = t.denominator.clone();
        denominator[j].1 += 1;
        out.push(GeneralizedTerm { numerator, denominator });
    }
    out
}

/// `c · (z_1∂_1)^{β_1} ⋯ (z_d∂_d)^{β_d}` applied to `s`, variables in
/// increasing order, merging after every operator pass.
pub fn apply_monomial(s: &GeneralizedTermSum, mono: &Monomial) -> GeneralizedTermSum {
    let mut cur = s.clone();
    for (r, &times) in mono.exponents.iter().enumerate() {
        for _ in 0..times {
            let next: Vec<GeneralizedTerm> = cur.terms.iter().flat_map(|t| apply_euler_operator(t, r)).collect();
            cur = merge_terms(s.dim, next);
        }
    }
    if !mono.coefficient.is_one() {
        let c = BigRational::from_integer(mono.coefficient.clone());
        for t in &mut cur.terms {
            for (v, _) in &mut t.numerator {
                *v *= &c;
            }
        }
        cur = cur.merged();
    }
    cur
}
