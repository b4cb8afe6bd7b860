//! Exact polyhedral geometry on integer inequality systems.

mod cone;
pub mod linalg;
mod polytope;

pub use cone::{Cone, LatticeBox, RationalPoint};
pub use polytope::Polytope;
