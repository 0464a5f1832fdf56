use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid slope `{0}`")]
    ParseSlope(String),
    #[error("invalid word `{input}`: unexpected character {found:?} at byte {position}")]
    ParseWord {
        input: String,
        found: char,
        position: usize,
    },
    #[error("0/0 is not an extended rational")]
    Indeterminate,
    #[error("slope {0} lies outside {1}")]
    OutOfRange(String, &'static str),
    #[error("index must be an integer >= 2, got {0}")]
    BadIndex(i64),
    #[error("continued fraction entries must be positive with last entry >= 2: {0:?}")]
    BadContinuedFraction(Vec<String>),
    #[error("epsilon index {i} out of range 1..={max}")]
    EpsilonRange { i: i64, max: i64 },
    #[error("the cyclic S-sequence of the empty word is undefined")]
    EmptyCyclicWord,
    #[error("matrix is not unimodular: det = {0}")]
    NotUnimodular(f64),
    #[error("matrix entries must have determinant +1 or -1")]
    BadDeterminant,
    #[error("slope too large for the slope word: denominator {0}")]
    SlopeTooLarge(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
