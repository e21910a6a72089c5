use thiserror::Error;

/// Errors raised by the exact-arithmetic pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable sets differ: {0} vs {1}")]
    VariableMismatch(String, String),

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,

    #[error("polynomial is not univariate")]
    NotUnivariate,

    #[error("all input forms are zero")]
    AllZero,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("ideal has no certified Gröbner basis")]
    MissingBasis,

    #[error("ideal is not homogeneous")]
    NotHomogeneous,

    #[error("saturation did not stabilize after {0} rounds")]
    SaturationCap(usize),

    #[error("odd-size matrix has no top Pfaffian (size {0})")]
    OddPfaffian(usize),

    #[error("matrix is not skew-symmetric: {0}")]
    NotSkew(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("expected rank {expected}, found {found}")]
    Rank { expected: usize, found: usize },

    #[error("points coincide projectively")]
    CoincidentPoints,

    #[error("web matrices are linearly dependent")]
    DependentWeb,

    #[error("point lies on the focal locus (rank {rank} < {expected}); try the pencil mode")]
    FocalPoint { rank: usize, expected: usize },

    #[error("point is not on the focal locus")]
    NotFocalPoint,

    #[error("line is not a line of the congruence")]
    NotCongruenceLine,

    #[error("degenerate focus: corank {0} at the point")]
    DegenerateFocus(usize),

    #[error("plane lies inside the focal locus")]
    PlaneInFocalLocus,

    #[error("singular matrix")]
    Singular,

    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    #[error("sample rejected: {0}")]
    Sample(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
