use thiserror::Error;

/// Domain errors shared by every module of the crate.
///
/// The variant name doubles as the error name reported by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("DegenerateInput: {0}")]
    DegenerateInput(String),
    #[error("OutOfRange: {0}")]
    OutOfRange(String),
    #[error("NotUnimodular: {0}")]
    NotUnimodular(String),
    #[error("BadModuli: {0}")]
    BadModuli(String),
    #[error("NotFullRank: {0}")]
    NotFullRank(String),
    #[error("BadInvariants: {0}")]
    BadInvariants(String),
    #[error("BadLength: {0}")]
    BadLength(String),
    #[error("ZeroIdeal: {0}")]
    ZeroIdeal(String),
    #[error("NonComaximal: {0}")]
    NonComaximal(String),
    #[error("BadProduct: {0}")]
    BadProduct(String),
    #[error("SearchExhausted: {0}")]
    SearchExhausted(String),
    #[error("Parse: {0}")]
    Parse(String),
}

impl Error {
    /// Short name of the error kind, e.g. `"NotUnimodular"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::OutOfRange(_) => "OutOfRange",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::BadModuli(_) => "BadModuli",
            Error::NotFullRank(_) => "NotFullRank",
            Error::BadInvariants(_) => "BadInvariants",
            Error::BadLength(_) => "BadLength",
            Error::ZeroIdeal(_) => "ZeroIdeal",
            Error::NonComaximal(_) => "NonComaximal",
            Error::BadProduct(_) => "BadProduct",
            Error::SearchExhausted(_) => "SearchExhausted",
            Error::Parse(_) => "Parse",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
