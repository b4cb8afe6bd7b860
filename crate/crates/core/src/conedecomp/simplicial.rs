use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::geometry::linalg::{adjugate, determinant, dot, dot_rational, mat_vec, transpose};
use crate::geometry::RationalPoint;
use crate::{Error, Result};

/// Sign of a term in a signed decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn to_bigint(self) -> BigInt {
        BigInt::from(self.to_i64())
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Generic direction `y = base + δ₁e₁ + δ₂e₂ + …` with `δ₁ ≫ δ₂ ≫ … > 0`
/// infinitesimal. It decides which boundary points a half-open cone keeps:
/// `x` belongs to the half-open version of a cone `K` iff `x + εy` lies in the
/// interior of `K` for all small `ε > 0`.
///
/// With `base` in the interior of a closed cone, the half-open version of that
/// cone is the closed cone itself, and every decomposition identity that holds
/// up to lower-dimensional sets holds exactly for the half-open pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TieBreak {
    pub base: Vec<BigInt>,
}

impl TieBreak {
    pub fn new(base: Vec<BigInt>) -> Self {
        TieBreak { base }
    }

    /// Sign of `⟨normal, y⟩`; never `Equal` for a nonzero normal.
    pub fn side(&self, normal: &[BigInt]) -> Ordering {
        let first = dot(normal, &self.base);
        if !first.is_zero() {
            return first.cmp(&BigInt::zero());
        }
        normal
            .iter()
            .find(|x| !x.is_zero())
            .map_or(Ordering::Equal, |x| x.cmp(&BigInt::zero()))
    }
}

/// `sign · [apex + half-open cone(rays)]`; facet `j` is the one not containing
/// ray `j`, and it is excluded when `open_facets[j]` is set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialCone {
    pub apex: RationalPoint,
    pub rays: Vec<Vec<BigInt>>,
    pub sign: Sign,
    pub open_facets: Vec<bool>,
    pub tie_break: TieBreak,
}

impl SimplicialCone {
    pub fn new(apex: RationalPoint, rays: Vec<Vec<BigInt>>, sign: Sign, tie_break: TieBreak) -> Result<Self> {
        let d = apex.dim();
        if rays.len() != d || rays.iter().any(|r| r.len() != d) {
            return Err(Error::DimensionMismatch { expected: d, found: rays.len() });
        }
        let det = determinant(&ray_matrix(&rays));
        if det.is_zero() {
            return Err(Error::DependentRays);
        }
        let normals = facet_normals(&rays, &det);
        let open_facets = normals.iter().map(|n| tie_break.side(n) == Ordering::Less).collect();
        Ok(SimplicialCone { apex, rays, sign, open_facets, tie_break })
    }

    pub fn dim(&self) -> usize {
        self.apex.dim()
    }

    /// Matrix with the rays as columns.
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        ray_matrix(&self.rays)
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.matrix())
    }

    /// Half-open membership of a lattice point, ignoring the sign.
    pub fn contains(&self, x: &[BigInt]) -> bool {
        let det = self.determinant();
        let normals = facet_normals(&self.rays, &det);
        let rel: Vec<BigRational> = x
            .iter()
            .zip(self.apex.coords())
            .map(|(xi, a)| BigRational::from_integer(xi.clone()) - a)
            .collect();
        normals.iter().zip(&self.open_facets).all(|(n, &open)| {
            let v = dot_rational(n, &rel);
            if open {
                v.is_positive()
            } else {
                !v.is_negative()
            }
        })
    }

    /// The single generating-function term of a unimodular cone: `u` is the
    /// lowest lattice point of the half-open cone in ray coordinates.
    pub fn unimodular_term(&self) -> Result<ConeTerm> {
        let r = self.matrix();
        let det = determinant(&r);
        if !det.abs().is_one() {
            return Err(Error::Internal(format!("cone of index {} is not unimodular", det.abs())));
        }
        // R^{-1} = adj(R)/det with det = ±1.
        let inv = adjugate(&r);
        let beta: Vec<BigRational> = inv
            .iter()
            .map(|row| dot_rational(row, self.apex.coords()) * BigRational::from_integer(det.clone()))
            .collect();
        let n: Vec<BigInt> = beta
            .iter()
            .zip(&self.open_facets)
            .map(|(b, &open)| if open { b.floor().to_integer() + 1 } else { b.ceil().to_integer() })
            .collect();
        let u = mat_vec(&r, &n);
        Ok(ConeTerm { sign: self.sign, u, rays: self.rays.clone() })
    }
}

/// `|det|` of the ray matrix.
pub fn cone_index(cone: &SimplicialCone) -> Result<BigInt> {
    let det = cone.determinant();
    if det.is_zero() {
        Err(Error::DependentRays)
    } else {
        Ok(det.abs())
    }
}

pub(crate) fn ray_matrix(rays: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    transpose(rays)
}

/// Integer inward facet normals: row `j` is a positive multiple of row `j` of
/// `R^{-1}`, so it vanishes on every ray but ray `j`.
pub(crate) fn facet_normals(rays: &[Vec<BigInt>], det: &BigInt) -> Vec<Vec<BigInt>> {
    let adj = adjugate(&ray_matrix(rays));
    adj.into_iter()
        .map(|row| {
            let row: Vec<BigInt> = if det.is_negative() { row.iter().map(|x| -x).collect() } else { row };
            let g = row.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if g.is_zero() || g.is_one() {
                row
            } else {
                row.iter().map(|x| x / &g).collect()
            }
        })
        .collect()
}

/// One summand `sign · z^u / Π_j (1 - z^{rays_j})` of a short rational
/// generating function; the rays form a unimodular basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ConeTerm {
    pub sign: Sign,
    pub u: Vec<BigInt>,
    pub rays: Vec<Vec<BigInt>>,
}

impl fmt::Display for ConeTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mono = |v: &[BigInt]| -> String {
            let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("z^({})", parts.join(","))
        };
        let den: Vec<String> = self.rays.iter().map(|r| format!("(1 - {})", mono(r))).collect();
        write!(f, "{} {} / [{}]", self.sign, mono(&self.u), den.join(" "))
    }
}

impl ConeTerm {
    /// Expands the term as a series and returns the coefficient at `alpha`:
    /// `sign` if `alpha - u` is a non-negative combination of the rays.
    pub fn coefficient_at(&self, alpha: &[BigInt]) -> BigInt {
        let r = ray_matrix(&self.rays);
        let det = determinant(&r);
        let adj = adjugate(&r);
        let diff: Vec<BigInt> = alpha.iter().zip(&self.u).map(|(a, b)| a - b).collect();
        let coords = mat_vec(&adj, &diff);
        if coords.iter().all(|c| !(c * &det).is_negative()) {
            self.sign.to_bigint()
        } else {
            BigInt::zero()
        }
    }
}
