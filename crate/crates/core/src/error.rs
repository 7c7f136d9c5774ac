use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("degree mismatch: expected {expected}, got {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("{what} limit of {limit} exceeded")]
    ResourceLimit { what: &'static str, limit: usize },

    #[error("element {0} is not a member of the group")]
    NotInGroup(String),

    #[error("subgroups belong to different parent groups")]
    ParentMismatch,

    #[error("subgroup of order {0} is not a member of the collection")]
    NotInCollection(usize),

    #[error("elements belong to different rings")]
    RingMismatch,

    #[error("{what} index {index} out of range (len {len})")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        len: usize,
    },

    #[error("element is not a unit")]
    NonUnit,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid Coxeter type: {0}")]
    InvalidType(String),

    #[error("unsupported Coxeter type {0}: only A, B, D and I2(m) factors can be enumerated")]
    UnsupportedType(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
