use num_bigint::BigInt;
use num_traits::Zero;

use super::*;
use crate::geometry::{Cone, Polytope, RationalPoint};

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn rays(rs: &[&[i64]]) -> Vec<Vec<BigInt>> {
    rs.iter().map(|r| ints(r)).collect()
}

fn poly(dim: usize, rows: &[(&[i64], i64)]) -> Polytope {
    Polytope::new(
        dim,
        rows.iter().map(|(a, _)| ints(a)).collect(),
        rows.iter().map(|(_, b)| BigInt::from(*b)).collect(),
    )
    .unwrap()
}

fn origin_cone(rs: &[&[i64]]) -> SimplicialCone {
    let d = rs.len();
    let r = rays(rs);
    let mut y = vec![BigInt::zero(); d];
    for ray in &r {
        for (a, b) in y.iter_mut().zip(ray) {
            *a += b;
        }
    }
    SimplicialCone::new(RationalPoint::from_integers(&vec![BigInt::zero(); d]), r, Sign::Plus, TieBreak::new(y))
        .unwrap()
}

fn box_points(d: usize, lo: i64, hi: i64) -> Vec<Vec<BigInt>> {
    let mut pts = vec![vec![]];
    for _ in 0..d {
        pts = pts
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(BigInt::from(x));
                    q
                })
            })
            .collect();
    }
    pts
}

fn signed_count(pieces: &[SimplicialCone], pts: &[Vec<BigInt>]) -> i64 {
    pts.iter()
        .map(|p| pieces.iter().filter(|c| c.contains(p)).map(|c| c.sign.to_i64()).sum::<i64>())
        .sum()
}

#[test]
fn indices() {
    assert_eq!(cone_index(&origin_cone(&[&[1, 0], &[0, 1]])).unwrap(), BigInt::from(1));
    assert_eq!(cone_index(&origin_cone(&[&[1, 0], &[1, 2]])).unwrap(), BigInt::from(2));
    assert_eq!(cone_index(&origin_cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 3]])).unwrap(), BigInt::from(3));
}

#[test]
fn dependent_rays_rejected() {
    let r = SimplicialCone::new(
        RationalPoint::from_integers(&ints(&[0, 0])),
        rays(&[&[1, 2], &[2, 4]]),
        Sign::Plus,
        TieBreak::new(ints(&[1, 1])),
    );
    assert_eq!(r, Err(crate::Error::DependentRays));
}

#[test]
fn unimodular_is_fixed_point() {
    let c = origin_cone(&[&[1, 0], &[0, 1]]);
    assert_eq!(barvinok_decompose(&c).unwrap(), vec![c]);
}

#[test]
fn index_two_cone_matches_enumeration() {
    let c = origin_cone(&[&[1, 0], &[1, 2]]);
    let pieces = barvinok_decompose(&c).unwrap();
    assert!(pieces.iter().all(|p| cone_index(p).unwrap() == BigInt::from(1)));
    let pts = box_points(2, 0, 10);
    // y ≥ 0 and 2x - y ≥ 0 inside [0,10]^2
    let direct = pts.iter().filter(|p| p[1] >= BigInt::zero() && &p[0] * 2 - &p[1] >= BigInt::zero()).count();
    assert_eq!(direct, 91);
    assert_eq!(signed_count(&pieces, &pts), 91);
}

#[test]
fn decomposition_size_grows_slowly() {
    let mut sizes = Vec::new();
    for n in [10i64, 1000, 1_000_000] {
        let c = origin_cone(&[&[1, 0], &[1, n]]);
        let pieces = barvinok_decompose(&c).unwrap();
        sizes.push(pieces.len());
        let pts = box_points(2, -3, 12);
        let direct = pts
            .iter()
            .filter(|p| p[1] >= BigInt::zero() && &p[0] * n - &p[1] >= BigInt::zero())
            .count() as i64;
        assert_eq!(signed_count(&pieces, &pts), direct);
    }
    assert!(sizes[2] <= 40, "sizes {sizes:?}");
}

#[test]
fn three_dimensional_decomposition() {
    let c = origin_cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 3]]);
    let pieces = barvinok_decompose(&c).unwrap();
    let pts = box_points(3, -1, 5);
    let direct = pts.iter().filter(|p| c.contains(p)).count() as i64;
    assert_eq!(signed_count(&pieces, &pts), direct);

    let c = origin_cone(&[&[2, 1, 0], &[-1, 3, 1], &[1, -1, 5]]);
    let pieces = barvinok_decompose(&c).unwrap();
    let pts = box_points(3, -4, 6);
    let direct = pts.iter().filter(|p| c.contains(p)).count() as i64;
    assert_eq!(signed_count(&pieces, &pts), direct);
}

#[test]
fn triangulating_a_square_pyramid_cone() {
    let cone = Cone {
        apex: RationalPoint::from_integers(&ints(&[0, 0, 0])),
        generators: rays(&[&[1, 1, 1], &[1, -1, 1], &[-1, 1, 1], &[-1, -1, 1]]),
        inequalities: rays(&[&[1, 0, -1], &[-1, 0, -1], &[0, 1, -1], &[0, -1, -1]]),
    };
    let tie = TieBreak::new(ints(&[0, 0, 4]));
    let pieces = triangulate(&cone, &tie).unwrap();
    assert_eq!(pieces.len(), 2);
    let pts = box_points(3, -4, 4);
    let direct = pts
        .iter()
        .filter(|p| cone.inequalities.iter().all(|a| crate::geometry::linalg::dot(a, p) <= BigInt::zero()))
        .count() as i64;
    assert_eq!(signed_count(&pieces, &pts), direct);
}

#[test]
fn simplicial_cone_triangulates_to_itself() {
    let cone = Cone {
        apex: RationalPoint::from_integers(&ints(&[0, 0])),
        generators: rays(&[&[1, 0], &[0, 1]]),
        inequalities: rays(&[&[-1, 0], &[0, -1]]),
    };
    let pieces = triangulate(&cone, &TieBreak::new(ints(&[1, 1]))).unwrap();
    assert_eq!(pieces.len(), 1);
    assert_eq!(pieces[0].rays, cone.generators);
    assert!(pieces[0].open_facets.iter().all(|o| !o));
}

#[test]
fn interval_generating_function() {
    let p = poly(1, &[(&[1], 2), (&[-1], 0)]);
    let g = generating_function(&p).unwrap();
    let mut terms = g.terms.clone();
    terms.sort();
    assert_eq!(
        terms,
        vec![
            ConeTerm { sign: Sign::Plus, u: ints(&[0]), rays: rays(&[&[1]]) },
            ConeTerm { sign: Sign::Plus, u: ints(&[2]), rays: rays(&[&[-1]]) },
        ]
    );
    assert_eq!(specialize_count(&g).unwrap(), BigInt::from(3));
}

#[test]
fn counts() {
    let sq = poly(2, &[(&[1, 0], 1), (&[-1, 0], 0), (&[0, 1], 1), (&[0, -1], 0)]);
    assert_eq!(specialize_count(&generating_function(&sq).unwrap()).unwrap(), BigInt::from(4));

    let ex1 = poly(2, &[(&[3996, -4], 3993), (&[-3996, 4], -3991), (&[2, 0], 5), (&[-2, 0], -1)]);
    let g = generating_function(&ex1).unwrap();
    assert_eq!(g.len(), 4);
    assert_eq!(specialize_count(&g).unwrap(), BigInt::from(2));

    let nvs = poly(2, &[(&[1, 0], 200), (&[-1, 0], 0), (&[0, 1], 200), (&[0, -1], 0)]);
    let g = generating_function(&nvs).unwrap();
    assert_eq!(g.len(), 4);
    assert_eq!(specialize_count(&g).unwrap(), BigInt::from(40401));

    let empty = poly(1, &[(&[1], 0), (&[-1], -1)]);
    let g = generating_function(&empty).unwrap();
    assert!(g.is_empty());
    assert_eq!(specialize_count(&g).unwrap(), BigInt::from(0));
}

#[test]
fn count_is_direction_independent() {
    let p = poly(3, &[(&[1, 2, 0], 7), (&[-3, 1, 1], 4), (&[0, -1, 2], 5), (&[1, 1, -4], 3), (&[-1, -1, -1], 6)]);
    let g = generating_function(&p).unwrap();
    let counts: Vec<BigInt> = (0..3)
        .map(|s| specialize_count_with(&g, &generic_direction(3, g.rays(), s)).unwrap())
        .collect();
    assert_eq!(counts[0], counts[1]);
    assert_eq!(counts[1], counts[2]);
}

#[test]
fn ehrhart_of_unit_cube() {
    for n in 1..=5i64 {
        for d in 1..=3usize {
            let mut rows = Vec::new();
            for i in 0..d {
                let mut e = vec![0i64; d];
                e[i] = 1;
                rows.push((e.clone(), n));
                e[i] = -1;
                rows.push((e, 0));
            }
            let rows: Vec<(&[i64], i64)> = rows.iter().map(|(a, b)| (a.as_slice(), *b)).collect();
            let g = generating_function(&poly(d, &rows)).unwrap();
            assert_eq!(specialize_count(&g).unwrap(), BigInt::from((n + 1).pow(d as u32)));
        }
    }
}

#[test]
fn octahedron_count() {
    let signs: [[i64; 3]; 8] = [
        [1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1],
        [-1, 1, 1], [-1, 1, -1], [-1, -1, 1], [-1, -1, -1],
    ];
    let rows: Vec<(&[i64], i64)> = signs.iter().map(|s| (s.as_slice(), 2)).collect();
    let g = generating_function(&poly(3, &rows)).unwrap();
    // |x|+|y|+|z| ≤ 2: 1 + 6 + 18
    assert_eq!(specialize_count(&g).unwrap(), BigInt::from(25));
}
