use num_bigint::BigInt;
use num_traits::Zero;

use crate::genfun::Polynomial;
use crate::geometry::Polytope;
use crate::Result;

/// The a-priori range `L ≤ f(x) ≤ U` on the box `[-M, M]^d` containing the
/// polytope, with `U = r C M^D = -L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftInfo {
    /// Largest absolute coordinate of the bounding box.
    pub m: BigInt,
    /// Largest absolute coefficient.
    pub c: BigInt,
    /// Number of monomials.
    pub r: usize,
    /// Total degree.
    pub d: u32,
    pub l: BigInt,
    pub u: BigInt,
    /// Whether the working objective is `f - L` rather than `f`.
    pub shifted: bool,
}

impl ShiftInfo {
    /// Amount to add to a working-scale value to get the original value.
    pub fn offset(&self) -> BigInt {
        if self.shifted {
            self.l.clone()
        } else {
            BigInt::zero()
        }
    }
}

/// Returns `f̄ = f - L` (or `f` itself when it is known to be non-negative on
/// the lattice points of `p`) with the bounds used.
pub fn normalize(p: &Polytope, f: &Polynomial, known_nonnegative: bool) -> Result<(Polynomial, ShiftInfo)> {
    let bbox = p.bounding_box()?;
    let m = bbox.magnitude();
    let c = f.max_abs_coefficient();
    let r = f.num_terms();
    let d = f.total_degree();
    let u = BigInt::from(r) * &c * m.pow(d);
    let l = -u.clone();
    let info = ShiftInfo { m, c, r, d, l, u, shifted: !known_nonnegative };
    let fbar = if known_nonnegative {
        f.clone()
    } else {
        f - &Polynomial::constant(f.dim(), info.l.clone())
    };
    Ok((fbar, info))
}
