use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("row lengths are not weakly decreasing: {0}")]
    Shape(String),
    #[error("row or column order violated: {0}")]
    Order(String),
    #[error("entries are not exactly 1..n: {0}")]
    Standardness(String),
    #[error("index out of range: {0}")]
    Range(String),
    #[error("not a permutation: {0}")]
    Permutation(String),
    #[error("tableau shapes do not match: {0}")]
    ShapeMismatch(String),
    #[error("not an involution: {0}")]
    Involution(String),
    #[error("invalid partial matching: {0}")]
    Matching(String),
    #[error("matching is not noncrossing: {0}")]
    NotNoncrossing(String),
    #[error("invalid lattice path: {0}")]
    Path(String),
    #[error("size {n} exceeds the enumeration limit {limit}")]
    Resource { n: usize, limit: usize },
    #[error("polynomial division leaves a remainder")]
    Divisibility,
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("tableau is not prime")]
    NotPrime,
    #[error("tableau is not Richardson")]
    NotRichardson,
}

impl Error {
    /// Stable machine-readable name for this error, used in CLI error bodies.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Shape(_) => "ShapeError",
            Error::Order(_) => "OrderError",
            Error::Standardness(_) => "StandardnessError",
            Error::Range(_) => "RangeError",
            Error::Permutation(_) => "PermutationError",
            Error::ShapeMismatch(_) => "ShapeMismatchError",
            Error::Involution(_) => "InvolutionError",
            Error::Matching(_) => "MatchingError",
            Error::NotNoncrossing(_) => "NotNoncrossingError",
            Error::Path(_) => "PathError",
            Error::Resource { .. } => "ResourceError",
            Error::Divisibility => "DivisibilityError",
            Error::Overflow(_) => "OverflowError",
            Error::NotPrime => "NotPrimeError",
            Error::NotRichardson => "NotRichardsonError",
        }
    }
}
