use thiserror::Error;

/// Errors raised by the combinatorial operations in this crate.
///
/// Member indices and elements in messages are 1-based, matching the JSON formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("member {index} is empty")]
    EmptyMember { index: usize },

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("invalid transversal: {0}")]
    InvalidTransversal(String),

    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("invalid shelling order: {0}")]
    InvalidOrder(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("oracle limit exceeded: {what} is {size}, bound is {bound}")]
    OracleLimit {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("m = {m} is outside the admissible range [{lower}, {upper}]")]
    MOutOfRange {
        m: usize,
        lower: usize,
        upper: usize,
    },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("witness word does not satisfy the configuration f(t(F)) = |F|")]
    WitnessRejected,

    #[error("no closed form for n - m = {0} (supported: 0, 1, 2)")]
    UnsupportedDifference(usize),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

impl Error {
    /// True for errors that come from exceeding a brute-force bound.
    pub fn is_oracle_limit(&self) -> bool {
        matches!(self, Error::OracleLimit { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_bound(what: &'static str, size: usize, bound: usize) -> Result<()> {
    if size > bound {
        Err(Error::OracleLimit { what, size, bound })
    } else {
        Ok(())
    }
}
