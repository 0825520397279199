use thiserror::Error;

/// Errors surfaced by the enumeration pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse shape {0:?}: expected WxL or KxMxL with positive integers")]
    ParseShape(String),

    #[error("cannot parse region {0:?}: expected dimensions separated by 'x'")]
    ParseRegion(String),

    #[error("cannot parse frontier label {0:?}")]
    ParseLabel(String),

    #[error("state graph exceeds node cap {cap} (state-count bound for this input is {bound})")]
    NodeCapExceeded { cap: usize, bound: String },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("series has {got} terms but {needed} are required")]
    InsufficientTerms { needed: usize, got: usize },

    #[error("series must start with coefficient 1, found {0}")]
    LeadingTermNotOne(String),

    #[error("irreducible decomposition produced a negative coefficient at index {index}")]
    NegativeIrreducible { index: usize },

    #[error("no linear recurrence of order <= {max_order} fits the supplied terms")]
    NoRationalFit { max_order: usize },

    #[error("denominator polynomial is zero")]
    ZeroDenominator,

    #[error("denominator constant term {0} is not a unit; cannot normalize over the integers")]
    NonUnitDenominator(String),

    #[error("rational function does not evaluate to 1 at z = 0")]
    ConstantTermNotOne,

    #[error("region volume {volume} exceeds the brute-force cap {cap}")]
    VolumeCapExceeded { cap: u64, volume: u64 },

    #[error("fixture file is malformed: {0}")]
    BadFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
