use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("constraint row {0} has no nonzero coefficient")]
    ZeroRow(usize),

    #[error("polytope required: the inequality system is unbounded")]
    Unbounded,

    #[error("polytope is not full-dimensional (it satisfies an implicit equality)")]
    LowerDimensional,

    #[error("empty feasible set")]
    EmptyFeasibleSet,

    #[error("point is not a vertex of the polytope")]
    NotAVertex,

    #[error("rays are linearly dependent")]
    DependentRays,

    #[error("degenerate denominator direction")]
    DegenerateDirection,

    #[error("enumeration budget exceeded: box holds {volume} points, budget is {budget}")]
    BudgetExceeded { volume: BigInt, budget: u64 },

    #[error("epsilon must lie in (0, 1]")]
    InvalidEpsilon,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}
