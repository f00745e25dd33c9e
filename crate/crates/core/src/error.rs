use thiserror::Error;

/// Errors raised by the sequence, walk, recurrence and series engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty sequence")]
    EmptySequence,

    #[error("unknown reference tag `{tag}` (known tags: {known})")]
    UnknownTag { tag: String, known: String },

    #[error("origin lies outside the domain of walk model `{0}`")]
    OriginOutsideDomain(String),

    #[error("matrix {0:?} is not unimodular")]
    NotUnimodular([[i64; 2]; 2]),

    #[error("recurrence has order {order} but {given} initial terms were supplied")]
    InitialTermCount { order: usize, given: usize },

    #[error("leading coefficient of the recurrence vanishes at n = {n}")]
    LeadingCoefficientVanishes { n: usize },

    #[error("inexact division while generating term {index}")]
    InexactDivision { index: usize },

    #[error("sequence of length {len} is too short for a recurrence of order {order}")]
    SequenceTooShort { len: usize, order: usize },

    #[error("uniform recurrence parameter must lie in 0..=3, got {0}")]
    ParameterOutOfRange(i64),

    #[error("series truncated at order {have} but {need} coefficients are required")]
    InsufficientTruncation { have: usize, need: usize },

    #[error("series constant term must be {expected}, found {found}")]
    ConstantTerm {
        expected: &'static str,
        found: String,
    },

    #[error("lower parameter {0} of 2F1 is a nonpositive integer")]
    HypergeometricPole(String),

    #[error("closed-form transcription inconsistent: bracket is not divisible by t^{0}")]
    ClosedFormInconsistent(usize),

    #[error("method `{method}` is not available for model `{model}`")]
    MethodUnavailable { model: String, method: String },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
