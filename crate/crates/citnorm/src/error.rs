//! Crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong while building publication data, deriving
/// baselines, scoring, or loading files.
#[derive(Debug, Error)]
pub enum Error {
    /// A publication with citations but an expected value of zero. By
    /// construction a field average can only be zero when every publication
    /// in the field is uncited, so this pairing is impossible in valid data.
    #[error("invalid publication: {cites} citations with an expected value of zero")]
    InvalidPublication { cites: u64 },

    /// Publication sets are non-empty by definition.
    #[error("empty publication set")]
    EmptySet,

    /// A field was requested that no corpus record belongs to.
    #[error("unknown field: {0}")]
    UnknownField(String),

    /// Average-performance consistency compares equally sized sets only.
    #[error("set size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    /// A homogeneous-normalization check needs a single shared expected value.
    #[error("set is not homogeneous: expected values differ")]
    NotHomogeneous,

    /// The CPP/FCSm weight decomposition divides by the mean expected value.
    #[error("cannot compute weights: total expected citations is zero")]
    ZeroExpectedTotal,

    /// Field labels are non-empty strings.
    #[error("empty field identifier")]
    EmptyFieldId,

    /// Record and group identifiers are non-empty strings.
    #[error("empty identifier")]
    EmptyId,

    /// A corpus record must belong to at least one field.
    #[error("record {0}: no field memberships")]
    EmptyFields(String),

    /// A corpus record may not list the same field twice; duplicates are a
    /// data-quality problem, not something to deduplicate silently.
    #[error("record {id}: duplicate field {field}")]
    DuplicateField { id: String, field: String },

    /// Corpus record identifiers are unique.
    #[error("duplicate record id: {0}")]
    DuplicateId(String),

    /// A corpus holds at least one record.
    #[error("empty corpus")]
    EmptyCorpus,

    /// Group definitions are keyed by unique group ids.
    #[error("duplicate group id: {0}")]
    DuplicateGroup(String),

    /// A member id appears twice within one group definition.
    #[error("group {group}: duplicate member {id}")]
    DuplicateMember { group: String, id: String },

    /// A group lists no members.
    #[error("group {0}: no members")]
    EmptyGroup(String),

    /// A group member id does not resolve against the corpus.
    #[error("group {group}: unknown member {id}")]
    UnknownMember { group: String, id: String },

    /// A report needs at least one indicator.
    #[error("no indicators requested")]
    NoIndicators,

    /// Citation counts are non-negative.
    #[error("line {line}: negative citation count")]
    NegativeCitations { line: usize },

    /// A malformed input row.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Rational numbers have nonzero denominators.
    #[error("zero denominator")]
    ZeroDenominator,

    /// A string that does not parse as a non-negative rational number.
    #[error("invalid number: {0:?}")]
    InvalidNumber(String),

    /// Counterexample-search bounds failed validation.
    #[error("invalid search bounds: {0}")]
    InvalidBounds(&'static str),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
