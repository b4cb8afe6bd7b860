//! Short rational generating functions of lattice points.
//!
//! Tangent cones are triangulated, each simplicial cone is decomposed into
//! signed unimodular cones (Barvinok), and the unimodular terms over all
//! vertices add up to the generating function of the polytope (Brion). Lower
//! dimensional overlaps are resolved with half-open cones, so every identity
//! is exact.

mod barvinok;
mod rational_sum;
mod simplicial;
mod triangulate;

pub use barvinok::barvinok_decompose;
pub use rational_sum::{
    generating_function, generic_direction, moment_direction, specialize_count, specialize_count_with,
    RationalFunctionSum,
};
pub use simplicial::{cone_index, ConeTerm, Sign, SimplicialCone, TieBreak};
pub use triangulate::triangulate;

#[cfg(test)]
mod tests;
