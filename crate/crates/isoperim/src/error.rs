use thiserror::Error as ThisError;

/// Failure modes shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    /// The operation is undefined on the empty set.
    #[error("operation requires a nonempty set")]
    EmptySet,
    /// The requested box bounds contain no lattice point.
    #[error("box bounds contain no lattice point")]
    EmptyBox,
    /// A size or index argument outside the operation's domain.
    #[error("invalid size argument: {0}")]
    InvalidSize(i64),
    /// No finite nonempty set realizes this boundary size (below 4, or 5).
    #[error("no finite set has vertex boundary of size {0}")]
    NoSuchBoundary(usize),
    /// The operation is only defined for minimal sets.
    #[error("set is not minimal")]
    NotMinimal,
    /// The request exceeds a documented size limit.
    #[error("size {requested} exceeds the supported limit {limit}")]
    SizeTooLarge { requested: usize, limit: usize },
    /// A coordinate magnitude exceeds the supported range.
    #[error("coordinate magnitude exceeds 2^30")]
    CoordinateOverflow,
    /// An analytic classification hypothesis does not hold for the input.
    #[error("hypothesis not satisfied: {0}")]
    HypothesisFailed(crate::graphmin::Hypothesis),
}
