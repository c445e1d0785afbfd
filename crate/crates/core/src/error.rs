use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse word at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("letters must be distinct positive integers: {0}")]
    InvalidWord(String),

    #[error("not a permutation of 1..{len}: {detail}")]
    NotAPermutation { len: usize, detail: String },

    #[error("level r={r} out of range for n={n} (need {requirement})")]
    LevelOutOfRange {
        r: usize,
        n: usize,
        requirement: &'static str,
    },

    #[error("label c={c} out of range 0..={max}")]
    LabelOutOfRange { c: usize, max: usize },

    #[error("{map} is not defined here: {detail}")]
    WrongCase { map: &'static str, detail: String },

    #[error("code entry c_{index}={value} exceeds its bound {max}")]
    CodeOutOfBounds {
        index: usize,
        value: usize,
        max: usize,
    },

    #[error("code has length {found}, expected {expected}")]
    CodeLength { found: usize, expected: usize },

    #[error("n={n} exceeds the enumeration guard {max}")]
    SizeGuard { n: usize, max: usize },

    #[error("unknown {what} `{value}`")]
    Unknown { what: &'static str, value: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
