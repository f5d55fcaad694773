use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkeinError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,
    #[error("specialized value is not a Laurent polynomial")]
    NotPolynomial,
    #[error("invalid arguments: {0}")]
    InvalidArgs(String),

    #[error("slice {index}: width bookkeeping is inconsistent")]
    BadWidth { index: usize },
    #[error("slice {index}: position out of range")]
    BadPos { index: usize },
    #[error("braid generator index {0} out of range")]
    BadIndex(i32),
    #[error("width mismatch: top has {top} bottom strands, bottom has {bottom} top strands")]
    WidthMismatch { top: usize, bottom: usize },
    #[error("diagram is not terminal (it still has a non-descending crossing)")]
    NotTerminal,
    #[error("diagram is not closed")]
    NotClosed,
    #[error("orientation is inconsistent at slice {index}")]
    BadOrientation { index: usize },

    #[error("tensor space too large: {dim} > {bound}")]
    TooLarge { dim: usize, bound: usize },
    #[error("no block of degree {0}")]
    NoSuchBlock(usize),
    #[error("unsupported diagram for the Schur model: {0}")]
    Unsupported(String),
    #[error("parse error in field `{field}`: {message}")]
    Parse { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, SkeinError>;
