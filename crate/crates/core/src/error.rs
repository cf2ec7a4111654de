use thiserror::Error;

/// Errors raised anywhere in the diagram → ordering → bounds pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("bad incidence: {0}")]
    BadIncidence(String),
    #[error("bad surgery coefficient: {0}")]
    BadCoefficient(String),
    #[error("diagram has no crossings")]
    EmptyDiagram,
    #[error("diagram is split: {components} connected components")]
    Disconnected { components: usize },
    #[error("rotation system is not spherical (V - E + F = {euler})")]
    NonSpherical { euler: i64 },
    #[error("graph is not simple")]
    NotSimple,
    #[error("graph too small: {0} vertices")]
    TooSmall(usize),
    #[error("graph too large for exhaustive search: {vertices} vertices (limit {limit})")]
    TooLarge { vertices: usize, limit: usize },
    #[error("ordering is not a bijection: {0}")]
    NotABijection(String),
    #[error("inconsistent inputs: {0}")]
    InconsistentInputs(String),
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Stable machine-readable name, used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::MalformedInput(_) => "MalformedInput",
            Error::BadIncidence(_) => "BadIncidence",
            Error::BadCoefficient(_) => "BadCoefficient",
            Error::EmptyDiagram => "EmptyDiagram",
            Error::Disconnected { .. } => "Disconnected",
            Error::NonSpherical { .. } => "NonSpherical",
            Error::NotSimple => "NotSimple",
            Error::TooSmall(_) => "TooSmall",
            Error::TooLarge { .. } => "TooLarge",
            Error::NotABijection(_) => "NotABijection",
            Error::InconsistentInputs(_) => "InconsistentInputs",
            Error::DomainError(_) => "DomainError",
            Error::HypothesisViolated(_) => "HypothesisViolated",
        }
    }
}
