use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::simplicial::{cone_index, Sign, SimplicialCone};
use crate::geometry::linalg::{adjugate, column_hermite_form, content, determinant, mat_vec};
use crate::Result;

/// A nonzero lattice vector `w = Σ α_i r_i` with `max |α_i| < 1`, small in
/// that norm, for a non-unimodular simplicial cone with rays `r_i`.
///
/// The coefficient vectors `α` form the lattice `R^{-1} Z^d`, of determinant
/// `1/index`, so a nonzero one exists in the cube `|α_i| ≤ index^{-1/d}`.
/// That cube is searched exhaustively along a triangular basis of the lattice.
pub(crate) fn short_vector(rays: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<BigRational>) {
    let d = rays.len();
    let r: Vec<Vec<BigInt>> = (0..d).map(|i| rays.iter().map(|ray| ray[i].clone()).collect()).collect();
    let det = determinant(&r);
    let index = det.abs();
    assert!(index > BigInt::one(), "cone is already unimodular");
    // α · index = sign(det) · adj(R) · w
    let mut a = adjugate(&r);
    if det.is_negative() {
        a = a.into_iter().map(|row| row.into_iter().map(|x| -x).collect()).collect();
    }
    let h = column_hermite_form(&a);
    let q = index.nth_root(d as u32).max(BigInt::one());

    let mut best: Option<(Vec<BigInt>, (BigInt, BigInt, usize, Vec<BigInt>))> = None;
    let mut coords = vec![BigInt::zero(); d];
    let mut partial = vec![BigInt::zero(); d];
    search(&h, &index, &q, 0, &mut coords, &mut partial, &mut best);
    let (v, _) = best.expect("a short vector exists by Minkowski's theorem");

    let mut w = mat_vec(&r, &v);
    for x in &mut w {
        *x /= &index;
    }
    let g = content(&w);
    let w: Vec<BigInt> = w.iter().map(|x| x / &g).collect();
    let alpha = v.iter().map(|x| BigRational::new(x.clone(), &index * &g)).collect();
    (w, alpha)
}

type Best = Option<(Vec<BigInt>, (BigInt, BigInt, usize, Vec<BigInt>))>;

fn search(
    h: &[Vec<BigInt>],
    index: &BigInt,
    q: &BigInt,
    level: usize,
    coords: &mut Vec<BigInt>,
    partial: &mut Vec<BigInt>,
    best: &mut Best,
) {
    let d = h.len();
    if level == d {
        // partial = H c = α · index
        if partial.iter().all(|x| x.is_zero()) || partial.iter().any(|x| &x.abs() >= index) {
            return;
        }
        let max = partial.iter().map(|x| x.abs()).max().unwrap();
        let sum: BigInt = partial.iter().map(|x| x.abs()).sum();
        let negatives = partial.iter().filter(|x| x.is_negative()).count();
        let key = (max, sum, negatives, partial.clone());
        if best.as_ref().map_or(true, |(_, k)| key < *k) {
            *best = Some((partial.clone(), key));
        }
        return;
    }
    let s: BigInt = (0..level).map(|j| &h[level][j] * &coords[j]).sum();
    let hii = &h[level][level];
    // q · |s + h_ii c| ≤ index
    let denom = q * hii;
    let lo = (-index - q * &s).div_ceil(&denom);
    let hi = (index - q * &s).div_floor(&denom);
    let mut c = lo;
    while c <= hi {
        coords[level] = c.clone();
        partial[level] = &s + hii * &c;
        search(h, index, q, level + 1, coords, partial, best);
        c += 1;
    }
}

/// Signed decomposition of a simplicial cone into unimodular cones.
///
/// With `w = Σ α_i r_i`, replacing ray `i` by `w` for every `α_i ≠ 0` gives
/// cones of index `|α_i| · index` whose signed sum, sign `sign(α_i)`, equals
/// the original cone up to lower-dimensional pieces; the half-open rule makes
/// the identity exact.
pub fn barvinok_decompose(cone: &SimplicialCone) -> Result<Vec<SimplicialCone>> {
    let mut done = Vec::new();
    let mut stack = vec![cone.clone()];
    while let Some(c) = stack.pop() {
        if cone_index(&c)?.is_one() {
            done.push(c);
            continue;
        }
        let (w, alpha) = short_vector(&c.rays);
        for (i, a) in alpha.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mut rays = c.rays.clone();
            rays[i] = w.clone();
            let sign = c.sign * Sign::of(a.numer());
            stack.push(SimplicialCone::new(c.apex.clone(), rays, sign, c.tie_break.clone())?);
        }
    }
    Ok(done)
}
