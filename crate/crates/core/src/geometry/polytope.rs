use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cone::{Cone, LatticeBox, RationalPoint};
use super::linalg::{content, cross, dot, dot_rational, primitive, rank, solve};
use crate::{Error, Result};

/// `{x ∈ Q^d : A x ≤ b}` with integer data.
///
/// Rows are stored divided by the gcd of their entries and right-hand side, so
/// the feasible set is unchanged. Zero rows are rejected.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polytope {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

impl Polytope {
    pub fn new(dim: usize, rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        if rows.len() != rhs.len() {
            return Err(Error::DimensionMismatch { expected: rows.len(), found: rhs.len() });
        }
        let mut out_rows = Vec::with_capacity(rows.len());
        let mut out_rhs = Vec::with_capacity(rhs.len());
        for (i, (row, b)) in rows.into_iter().zip(rhs).enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: row.len() });
            }
            if row.iter().all(|x| x.is_zero()) {
                return Err(Error::ZeroRow(i));
            }
            let g = content(&row).gcd(&b);
            out_rows.push(row.iter().map(|x| x / &g).collect());
            out_rhs.push(b / &g);
        }
        Ok(Polytope { dim, rows: out_rows, rhs: out_rhs })
    }

    /// Builds a polytope from rational data, clearing denominators row by row.
    pub fn from_rational(dim: usize, rows: Vec<Vec<BigRational>>, rhs: Vec<BigRational>) -> Result<Self> {
        let mut int_rows = Vec::with_capacity(rows.len());
        let mut int_rhs = Vec::with_capacity(rhs.len());
        for (row, b) in rows.iter().zip(&rhs) {
            let l = row.iter().chain(std::iter::once(b)).fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let scale = BigRational::from_integer(l);
            int_rows.push(row.iter().map(|x| (x * &scale).to_integer()).collect());
            int_rhs.push((b * &scale).to_integer());
        }
        if rows.len() != rhs.len() {
            return Err(Error::DimensionMismatch { expected: rows.len(), found: rhs.len() });
        }
        Polytope::new(dim, int_rows, int_rhs)
    }

    /// The box `lower ≤ x ≤ upper`.
    pub fn from_box(b: &LatticeBox) -> Result<Self> {
        let d = b.dim();
        let mut rows = Vec::with_capacity(2 * d);
        let mut rhs = Vec::with_capacity(2 * d);
        for i in 0..d {
            let mut e = vec![BigInt::zero(); d];
            e[i] = BigInt::one();
            rows.push(e.clone());
            rhs.push(b.upper[i].clone());
            e[i] = -BigInt::one();
            rows.push(e);
            rhs.push(-&b.lower[i]);
        }
        Polytope::new(d, rows, rhs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn rhs(&self) -> &[BigInt] {
        &self.rhs
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// The same system with extra rows appended.
    pub fn with_constraints(&self, rows: Vec<Vec<BigInt>>, rhs: Vec<BigInt>) -> Result<Self> {
        let mut all_rows = self.rows.clone();
        let mut all_rhs = self.rhs.clone();
        all_rows.extend(rows);
        all_rhs.extend(rhs);
        Polytope::new(self.dim, all_rows, all_rhs)
    }

    pub fn contains(&self, x: &[BigInt]) -> Result<bool> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: x.len() });
        }
        Ok(self.rows.iter().zip(&self.rhs).all(|(a, b)| &dot(a, x) <= b))
    }

    pub fn contains_rational(&self, x: &RationalPoint) -> bool {
        x.dim() == self.dim
            && self.rows.iter().zip(&self.rhs).all(|(a, b)| dot_rational(a, x.coords()) <= BigRational::from_integer(b.clone()))
    }

    fn tight_rows(&self, x: &RationalPoint) -> Vec<usize> {
        (0..self.rows.len())
            .filter(|&i| dot_rational(&self.rows[i], x.coords()) == BigRational::from_integer(self.rhs[i].clone()))
            .collect()
    }

    /// Directions `u` spanned by `d-1` of the given rows, oriented so that all
    /// given rows satisfy `a · u ≤ 0`. These are the extreme rays of
    /// `{u : a · u ≤ 0}` when that cone is pointed.
    fn extreme_rays(&self, rows: &[usize]) -> Vec<Vec<BigInt>> {
        let mut rays = BTreeSet::new();
        for subset in combinations(rows.len(), self.dim - 1) {
            let vs: Vec<Vec<BigInt>> = subset.iter().map(|&i| self.rows[rows[i]].clone()).collect();
            let u = primitive(&cross(&vs, self.dim));
            if u.iter().all(|x| x.is_zero()) {
                continue;
            }
            let neg: Vec<BigInt> = u.iter().map(|x| -x).collect();
            for cand in [u, neg] {
                if rows.iter().all(|&i| !dot(&self.rows[i], &cand).is_positive()) {
                    rays.insert(cand);
                }
            }
        }
        rays.into_iter().collect()
    }

    /// Errors unless the feasible set is bounded (possibly empty).
    pub fn check_bounded(&self) -> Result<()> {
        if rank(&self.rows) < self.dim {
            return Err(Error::Unbounded);
        }
        let all: Vec<usize> = (0..self.rows.len()).collect();
        if self.extreme_rays(&all).is_empty() {
            Ok(())
        } else {
            Err(Error::Unbounded)
        }
    }

    /// All vertices, sorted and without duplicates. Empty for an infeasible
    /// system; an error for an unbounded one.
    pub fn vertices(&self) -> Result<Vec<RationalPoint>> {
        self.check_bounded()?;
        let mut out = BTreeSet::new();
        for subset in combinations(self.rows.len(), self.dim) {
            let a: Vec<Vec<BigInt>> = subset.iter().map(|&i| self.rows[i].clone()).collect();
            let b: Vec<BigInt> = subset.iter().map(|&i| self.rhs[i].clone()).collect();
            if let Some(x) = solve(&a, &b) {
                let p = RationalPoint(x);
                if self.contains_rational(&p) {
                    out.insert(p);
                }
            }
        }
        Ok(out.into_iter().collect())
    }

    /// True iff no inequality is tight on the whole (nonempty) polytope.
    pub fn is_full_dimensional(&self, vertices: &[RationalPoint]) -> bool {
        if vertices.is_empty() {
            return false;
        }
        (0..self.rows.len()).all(|i| {
            let b = BigRational::from_integer(self.rhs[i].clone());
            vertices.iter().any(|v| dot_rational(&self.rows[i], v.coords()) != b)
        })
    }

    /// Vertices of a bounded, full-dimensional polytope; empty when infeasible.
    pub fn pipeline_vertices(&self) -> Result<Vec<RationalPoint>> {
        let vs = self.vertices()?;
        if !vs.is_empty() && !self.is_full_dimensional(&vs) {
            return Err(Error::LowerDimensional);
        }
        Ok(vs)
    }

    /// The tangent cone at vertex `v`: inequalities tight at `v`, generated by
    /// the primitive edge directions leaving `v`.
    pub fn tangent_cone(&self, v: &RationalPoint) -> Result<Cone> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.dim() });
        }
        if !self.contains_rational(v) {
            return Err(Error::NotAVertex);
        }
        let tight = self.tight_rows(v);
        let tight_matrix: Vec<Vec<BigInt>> = tight.iter().map(|&i| self.rows[i].clone()).collect();
        if rank(&tight_matrix) < self.dim {
            return Err(Error::NotAVertex);
        }
        let generators = self.extreme_rays(&tight);
        Ok(Cone { apex: v.clone(), generators, inequalities: tight_matrix })
    }

    /// Smallest integer box containing the polytope: coordinatewise floor of
    /// the minimum and ceiling of the maximum over the vertices.
    pub fn bounding_box(&self) -> Result<LatticeBox> {
        let vs = self.vertices()?;
        if vs.is_empty() {
            return Err(Error::EmptyFeasibleSet);
        }
        let mut lower = Vec::with_capacity(self.dim);
        let mut upper = Vec::with_capacity(self.dim);
        for i in 0..self.dim {
            let lo = vs.iter().map(|v| &v.0[i]).min().unwrap();
            let hi = vs.iter().map(|v| &v.0[i]).max().unwrap();
            lower.push(lo.floor().to_integer());
            upper.push(hi.ceil().to_integer());
        }
        Ok(LatticeBox::new(lower, upper))
    }

    /// Substitutes `y = y'/n` for the variables in `continuous` and clears the
    /// denominator: row `A x + B y ≤ b` becomes `n A x + B y' ≤ n b`.
    pub fn semi_dilate(&self, n: &BigInt, continuous: &[usize]) -> Result<Polytope> {
        if !n.is_positive() {
            return Err(Error::InvalidParameter("dilation factor must be positive".into()));
        }
        if let Some(&bad) = continuous.iter().find(|&&i| i >= self.dim) {
            return Err(Error::InvalidParameter(format!("variable index {bad} out of range")));
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(j, a)| if continuous.contains(&j) { a.clone() } else { a * n })
                    .collect()
            })
            .collect();
        let rhs = self.rhs.iter().map(|b| b * n).collect();
        Polytope::new(self.dim, rows, rhs)
    }
}

impl fmt::Display for Polytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (row, b) in self.rows.iter().zip(&self.rhs) {
            let terms: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}] . x <= {b}", terms.join(", "))?;
        }
        Ok(())
    }
}
