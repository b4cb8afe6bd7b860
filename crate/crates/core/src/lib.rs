//! Exact integer polynomial optimization over the lattice points of a rational
//! polytope in fixed dimension.
//!
//! The lattice points of a polytope are encoded as a short signed sum of
//! unimodular-cone rational functions. Differential operators turn that sum
//! into a generating function for `f(α)`, and evaluating it at `z = 1` gives
//! the exact power sums `Σ f(α)^k` without listing the points. Those power sums
//! give the lower and upper bound sequences `L_k ≤ f* ≤ U_k`, an exact optimizer,
//! an FPTAS for non-negative objectives, and bisection-based recovery of a good
//! lattice point.
//!
//! Module map:
//!
//! - [`exactnum`]: rationals, truncated Laurent series, certified integer roots.
//! - [`geometry`]: H-polytopes, vertices, tangent cones, bounding boxes.
//! - [`conedecomp`]: triangulation, signed unimodular decomposition, counting.
//! - [`genfun`]: polynomials and the Euler-operator algebra on generating functions.
//! - [`optimize`]: bound sequences, exact optimum, FPTAS, point recovery, grids.
//! - [`oracle`]: brute-force enumeration used as ground truth.
//! - [`instances`]: worked examples, the quadratic-residue family, random instances.

pub mod conedecomp;
mod error;
pub mod exactnum;
pub mod genfun;
pub mod geometry;
pub mod instances;
pub mod optimize;
pub mod oracle;

pub use error::{Error, Result};
