//! Maximizing a polynomial over the lattice points of a polytope from the
//! power sums `S_k = Σ f(α)^k`, read off the generating function.
//!
//! The bounds `(S_k/N)^{1/k} ≤ f* ≤ S_k^{1/k}` tighten as `k` grows; the exact
//! loop stops once they pin down an integer, and the approximation scheme
//! picks `k` large enough for a `(1 - ε)` guarantee.

mod bounds;
mod exact;
mod fptas;
mod mixed;
mod normalize;

pub use bounds::{bounds, BoundsReport, PowerSums};
pub use exact::{optimize_exact, optimize_exact_with, ExactOptions, ExactStatus, OptimizeOutcome, StoppingRule};
pub use fptas::{fptas, fptas_k, recover_point, FptasMode, FptasResult};
pub use mixed::{mixed_integer_sequence, MixedEntry, SubproblemSolver};
pub use normalize::{normalize, ShiftInfo};
