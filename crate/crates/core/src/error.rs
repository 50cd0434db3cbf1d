use thiserror::Error;

/// Engine-wide error type.
///
/// Every fallible operation in the workbench reports through this enum so
/// that claim procedures and the CLI can propagate failures uniformly.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Interval division where the divisor encloses zero.
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,

    /// Real elementary function applied outside its domain
    /// (ln of an interval touching zero, sqrt of a negative interval, ...).
    #[error("domain error: {0}")]
    DomainError(String),

    /// Complex logarithm / power of a rectangle intersecting the branch cut
    /// {Re <= 0, Im = 0}.
    #[error("rectangle intersects the principal branch cut")]
    BranchCutError,

    /// Expression text failed to tokenize or parse.
    #[error("syntax error at byte {offset}: {message}")]
    SyntaxError { offset: usize, message: String },

    /// Identifier in an expression that is not a known constant or function.
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),

    /// A certified comparison was asked of a comparand whose imaginary
    /// enclosure excludes zero (or could not be pinned to zero).
    #[error("comparand is not certifiably real: {0}")]
    NonRealComparand(String),

    /// Claim id not present in the registry.
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    /// Matrix operation with incompatible shapes.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The antidiagonal operator family requires a nonzero parameter.
    #[error("alpha must be nonzero")]
    ZeroAlpha,

    /// The 2x2 inequality checker requires strictly positive entries.
    #[error("matrix has non-positive entries")]
    NonPositiveEntries,

    /// Curve with zero area or otherwise unusable geometry.
    #[error("degenerate curve: {0}")]
    DegenerateCurve(String),

    /// Polygon vertices do not form a strictly convex cycle.
    #[error("polygon is not strictly convex")]
    NotConvex,

    /// Malformed input that is not a syntax error in the expression grammar
    /// (bad precision, bad flag values, ...).
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
