use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported algebra: {0}")]
    UnsupportedAlgebra(String),

    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),

    #[error("Killing metric is degenerate")]
    DegenerateMetric,

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("slot pair ({i}, {j}) out of range for tensor power {n}")]
    SlotOutOfRange { i: usize, j: usize, n: usize },

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("modular ranks disagree and exact elimination did not settle it: {0}")]
    ModularDisagreement(String),

    #[error("pole of the {label} dimension formula at alpha = {alpha}")]
    PoleEncountered { label: String, alpha: String },

    #[error("no tabulated dimension formula for {0}")]
    NoFormula(String),

    #[error("no closed-form trace for n = {n}, k = {k}")]
    FormulaNotPrinted { n: usize, k: usize },

    #[error("missing parameter: {0}")]
    MissingParameter(String),

    #[error("singular Vandermonde system: eigenvalue {0} repeated")]
    SingularSystem(String),

    #[error("inconsistent system: residual {residual} in row k = {k}")]
    InconsistentSystem { k: usize, residual: String },

    #[error("observed spectrum not covered by the catalog: {0}")]
    SpectrumMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
