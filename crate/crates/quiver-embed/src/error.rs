use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("unsupported stability parameter {0:?}; only theta = +-(1,...,1) is implemented")]
    UnsupportedTheta(Vec<i64>),
    #[error("no fixed points for v = {v:?}, w = {w:?}")]
    EmptyVariety { v: Vec<usize>, w: Vec<usize> },
    #[error("no pivot: every framing already sits at the last vertex")]
    NoPivot,
    #[error("enumeration limit exceeded: {total} boxes > {limit}")]
    LimitExceeded { total: usize, limit: usize },
    #[error("inadmissible degree assignment: {0}")]
    InadmissibleDegrees(String),
    #[error("pole at evaluation point")]
    PoleAtPoint,
    #[error("evaluation degenerate after {0} attempts")]
    EvaluationDegenerate(usize),
    #[error("invalid input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
