use thiserror::Error;

use crate::rootsys::Basis;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported diagram type {0}")]
    UnsupportedDiagram(String),
    #[error("basis mismatch: {0:?} vs {1:?}")]
    BasisMismatch(Basis, Basis),
    #[error("dimension mismatch: {0} vs {1}")]
    Dimension(usize, usize),
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("simple index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("weight has no integral doubled ε-coordinates")]
    NonIntegral,
    #[error("unknown case `{0}`")]
    UnknownCase(String),
    #[error("invalid node {0}")]
    InvalidNode(usize),
    #[error("malformed label `{0}`")]
    MalformedLabel(String),
    #[error("unknown label `{0}` for case {1}")]
    UnknownLabel(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("case {0} has no tensor structure")]
    NoTensorStructure(String),
    #[error("invariant solution space has dimension {0}, expected 1")]
    InvariantSpace(usize),
    #[error("invalid flag space: {0}")]
    FlagSpace(String),
    #[error("exterior power {0} out of range 0..={1}")]
    PowerOutOfRange(usize, usize),
    #[error("size guard: {what} needs {cells} cells (cap {cap})")]
    SizeGuard { what: String, cells: u128, cap: u128 },
    #[error("weight multiset is not Weyl-symmetric at {0}")]
    NotSymmetric(String),
    #[error("numerator has nonzero coefficients beyond the truncation degree {0}")]
    Truncation(usize),
    #[error("atlas schema error in {file}: {msg}")]
    Schema { file: String, msg: String },
    #[error("no desingularization data for {0}")]
    NoDesingData(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
