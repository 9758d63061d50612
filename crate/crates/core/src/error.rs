use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("exponent {0} is not an integer multiple of 1/2")]
    NonHalfExponent(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("cannot combine vectors of charge {0} and {1}")]
    MixedCharge(i64, i64),

    #[error("{0} is not invertible")]
    NotInvertible(String),

    #[error("cannot resolve symbol {symbol}: {reason}")]
    Unresolvable { symbol: String, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("calibration grid has {count} assignments, over the budget of {budget}")]
    GridTooLarge { count: u128, budget: u128 },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
