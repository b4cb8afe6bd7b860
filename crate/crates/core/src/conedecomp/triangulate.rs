use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::simplicial::{Sign, SimplicialCone, TieBreak};
use crate::geometry::linalg::{dot, rank};
use crate::geometry::Cone;
use crate::{Error, Result};

/// Pulling triangulation of a full-dimensional pointed cone.
///
/// The first generator is pulled: the cone is the union of the cones over it
/// and each facet not containing it, and facets are triangulated the same way.
/// Overlaps along shared facets are resolved by the half-open rule of
/// `tie_break`, which should point into the interior of `cone`.
pub fn triangulate(cone: &Cone, tie_break: &TieBreak) -> Result<Vec<SimplicialCone>> {
    let d = cone.dim();
    if cone.generators.len() < d || rank(&cone.generators) < d {
        return Err(Error::LowerDimensional);
    }
    let all: Vec<usize> = (0..cone.generators.len()).collect();
    let mut simplices = Vec::new();
    pull(cone, &all, d, &mut simplices);
    simplices
        .into_iter()
        .map(|idx| {
            let rays = idx.iter().map(|&i| cone.generators[i].clone()).collect();
            SimplicialCone::new(cone.apex.clone(), rays, Sign::Plus, tie_break.clone())
        })
        .collect()
}

fn pull(cone: &Cone, face: &[usize], k: usize, out: &mut Vec<Vec<usize>>) {
    if face.len() == k {
        out.push(face.to_vec());
        return;
    }
    let first = face[0];
    let mut facets = BTreeSet::new();
    for h in &cone.inequalities {
        if dot(h, &cone.generators[first]).is_zero() {
            continue;
        }
        let on: Vec<usize> = face
            .iter()
            .copied()
            .filter(|&i| dot(h, &cone.generators[i]).is_zero())
            .collect();
        if on.len() < k - 1 {
            continue;
        }
        let vs: Vec<Vec<BigInt>> = on.iter().map(|&i| cone.generators[i].clone()).collect();
        if rank(&vs) == k - 1 {
            facets.insert(on);
        }
    }
    for facet in facets {
        let start = out.len();
        pull(cone, &facet, k - 1, out);
        for s in &mut out[start..] {
            s.insert(0, first);
        }
    }
}
