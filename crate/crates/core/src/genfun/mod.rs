//! Weighted generating functions `Σ_α f(α) z^α`.
//!
//! The Euler operators `z_r ∂/∂z_r` multiply the coefficient of `z^α` by
//! `α_r`, so a polynomial in them turns the generating function of a polytope
//! into that of `f` over its lattice points. Evaluating at `z = 1` gives
//! power sums `Σ f(α)^k` without listing any lattice point.

mod apply;
mod polynomial;
mod specialize;
mod term;

pub use apply::{apply_polynomial, apply_polynomial_generic, PowerApplier};
pub use polynomial::{poly_pow, Monomial, Polynomial};
pub use specialize::{specialize_at_one, specialize_at_one_with};
pub use term::{apply_euler_operator, apply_monomial, lift, Denominator, GeneralizedTerm, GeneralizedTermSum};
