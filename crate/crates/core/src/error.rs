use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("shape mismatch: gl({}|{}) vs gl({}|{})", .0 .0, .0 .1, .1 .0, .1 .1)]
    ShapeMismatch((usize, usize), (usize, usize)),
    #[error("matrix is not parity-homogeneous")]
    Inhomogeneous,
    #[error("bracket [{0}, {1}] leaves the span of the basis")]
    NotClosed(String, String),
    #[error("not an ideal: [{0}, {1}] has a component outside it")]
    NotIdeal(String, String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("not a representation: {0}")]
    Representation(String),
    #[error("cochain is not even")]
    NotEven,
    #[error("about {estimate} cochains needed, over the limit of {limit}")]
    TooLarge { estimate: u128, limit: u128 },
    #[error("recursion cannot proceed: {0}")]
    Recursion(String),
    #[error("unknown algebra `{0}`")]
    UnknownName(String),
}

pub type Result<T> = std::result::Result<T, Error>;
