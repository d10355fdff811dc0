use thiserror::Error;

/// Errors raised by the library. Each variant is a domain error; malformed
/// input is reported through [`Error::Parse`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("subspace is not invariant: {0}")]
    NotInvariant(String),

    #[error("operator is not nilpotent")]
    NotNilpotent,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("filtration is not monotone at weight {0}")]
    NotMonotone(i64),

    #[error("filtration is not exhaustive: top step is not the whole space")]
    NotExhaustive,

    #[error("map does not preserve the filtrations at weight {0}")]
    NotFiltrationPreserving(i64),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid curve system: {0}")]
    InvalidCurveSystem(String),

    #[error("invalid pants graph: {0}")]
    InvalidPantsGraph(String),

    #[error("illegal A-move: {0}")]
    IllegalMove(String),

    #[error("edit changes the span of the curve system")]
    SpanChanged,

    #[error("subspace lattice exceeded {0} elements")]
    LatticeOverflow(usize),

    #[error("partition has {len} rows but gl_{g} allows at most {g}")]
    PartitionTooLong { len: usize, g: usize },

    #[error("integer overflow")]
    Overflow,

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
