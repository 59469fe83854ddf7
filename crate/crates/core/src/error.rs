use thiserror::Error;

use crate::poly::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid t-basis index (2l={two_l}, 2n={two_n}, 2m={two_m})")]
    InvalidIndex { two_l: i64, two_n: i64, two_m: i64 },
    #[error("input is not harmonic in alphabet {0:?}")]
    NotHarmonic(Alphabet),
    #[error("result has a denominator that is not a power of N")]
    NotInZh,
    #[error("alphabet {0:?} is not allowed here")]
    Alphabet(Alphabet),
    #[error("parse error at {pos}: expected {expected}")]
    Parse { pos: usize, expected: String },
    #[error("point outside the required domain: {0}")]
    Domain(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
