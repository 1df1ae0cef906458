use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("quaternion norm {norm} is not within tolerance of 1")]
    NotUnit { norm: f64 },
    #[error("{what} = {value} is out of range")]
    OutOfRange { what: &'static str, value: f64 },
    #[error("{0}")]
    Domain(String),
    #[error("letter {letter} is not a generator index for rank {rank}")]
    LetterOutOfRange { letter: i32, rank: usize },
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("rank {0} is below the minimum of 2")]
    RankTooSmall(usize),
    #[error("slot {slot} is invalid for rank {rank}")]
    InvalidSlot { slot: usize, rank: usize },
    #[error("automorphism {0}: forward and backward maps are not mutually inverse")]
    NotInverse(String),
    #[error("cannot parse word literal {0:?}")]
    WordSyntax(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("unknown statistic {0:?}")]
    UnknownStatistic(String),
    #[error("invalid realizability method {0:?}")]
    InvalidMethod(String),
    #[error("matrix is not unimodular (determinant {0})")]
    NonUnimodular(i128),
    #[error("sample set is empty")]
    EmptySample,
    #[error("boundary traces are not realizable by an SU(2) representation")]
    Unrealizable,
    #[error("sampling exhausted {0} tries")]
    ExhaustedTries(usize),
    #[error("connectivity search failed: {0}")]
    SearchFailed(String),
    #[error("invalid walk specification: {0}")]
    InvalidSpec(String),
}
