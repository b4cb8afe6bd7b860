//! Small exact linear algebra over the integers and rationals.
//!
//! Matrices are row-major `Vec<Vec<_>>`; dimensions are tiny, so every routine
//! favours exactness and simplicity over asymptotics.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rational(a: &[BigInt], b: &[BigRational]) -> BigRational {
    a.iter()
        .zip(b)
        .map(|(x, y)| y * x)
        .fold(BigRational::zero(), |acc, t| acc + t)
}

/// gcd of all entries; zero for the zero vector.
pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
}

/// `v` divided by its content. The zero vector is returned unchanged.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let g = content(v);
    if g.is_zero() || g.is_one() {
        v.to_vec()
    } else {
        v.iter().map(|x| x / &g).collect()
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank by rational Gaussian elimination.
pub fn rank(m: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        for r in 0..rows {
            if r != rank && !a[r][c].is_zero() {
                let f = &a[r][c] / &a[rank][c];
                for j in c..cols {
                    let v = &a[rank][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Solves the square system `m x = b`; `None` when `m` is singular.
pub fn solve(m: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigRational>> {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            r.iter()
                .chain(std::iter::once(bi))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let pivot = a[c][c].clone();
        for j in c..=n {
            a[c][j] /= &pivot;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in c..=n {
                    let v = &a[c][j] * &f;
                    a[r][j] -= v;
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}

/// Adjugate: `m · adj(m) = det(m) · I`.
pub fn adjugate(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![BigInt::one()]];
    }
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = m
                .iter()
                .enumerate()
                .filter(|(r, _)| *r != i)
                .map(|(_, row)| {
                    row.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let d = determinant(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

/// Generalized cross product of `d - 1` vectors in dimension `d`: a vector
/// orthogonal to all of them, zero iff they are dependent.
pub fn cross(vectors: &[Vec<BigInt>], d: usize) -> Vec<BigInt> {
    assert_eq!(vectors.len() + 1, d);
    (0..d)
        .map(|i| {
            let minor: Vec<Vec<BigInt>> = vectors
                .iter()
                .map(|v| {
                    v.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != i)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let det = determinant(&minor);
            if i % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect()
}

pub fn transpose(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = m.first().map_or(0, |r| r.len());
    (0..cols).map(|c| m.iter().map(|r| r[c].clone()).collect()).collect()
}

/// `m · v` for a matrix and a column vector.
pub fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Column-style Hermite normal form of a nonsingular square matrix: a lower
/// triangular `h` whose columns generate the same lattice as the columns of
/// `m`, with positive diagonal and `0 ≤ h[i][j] < h[i][i]` for `j < i`.
pub fn column_hermite_form(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    // Row operations on the transpose are column operations on `m`.
    let mut a = transpose(m);
    for c in 0..n {
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let e = a[c][c].extended_gcd(&a[r][c]);
            let (p, q) = (&a[c][c] / &e.gcd, &a[r][c] / &e.gcd);
            let top: Vec<BigInt> = (0..n).map(|j| &e.x * &a[c][j] + &e.y * &a[r][j]).collect();
            let bottom: Vec<BigInt> = (0..n).map(|j| &p * &a[r][j] - &q * &a[c][j]).collect();
            a[c] = top;
            a[r] = bottom;
        }
        assert!(!a[c][c].is_zero(), "matrix must be nonsingular");
        if a[c][c].is_negative() {
            a[c] = a[c].iter().map(|x| -x).collect();
        }
        for r in 0..c {
            let f = a[r][c].div_floor(&a[c][c]);
            if !f.is_zero() {
                for j in 0..n {
                    let v = &f * &a[c][j];
                    a[r][j] -= v;
                }
            }
        }
    }
    transpose(&a)
}
