use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("field error: {0}")]
    Field(String),
    #[error("scalar error: {0}")]
    Scalar(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("structures live over different algebras: {0}")]
    AlgebraMismatch(String),
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map does not send unit to unit")]
    NotUnital,
    #[error("subspace is not invariant: basis vector {vector} leaves it under action {action}")]
    NotInvariant { vector: usize, action: usize },
    #[error("vector does not lie in the required subspace: {0}")]
    NotInSubspace(String),
    #[error("map does not descend to the tensor product over the middle algebra: balancing relation {relation} is not killed")]
    NotBalanced { relation: usize },
    #[error("enumeration cap exceeded: dimension {dim} over {field} exceeds limit {limit}")]
    CapExceeded { dim: usize, field: String, limit: usize },
    #[error("exhaustive enumeration needs a finite field, got {0}")]
    InfiniteField(String),
    #[error("element is not grouplike: {0}")]
    NotGrouplike(String),
    #[error("integral pairing is degenerate; input is not a Hopf algebra")]
    DegeneratePairing,
    #[error("{0}")]
    Invalid(String),
    #[error("parse error in {path} at line {line}, column {column}: {msg}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        msg: String,
    },
    #[error("schema error at {field}: {msg}")]
    Schema { field: String, msg: String },
    #[error("io error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn schema(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            msg: msg.into(),
        }
    }

    pub fn dim(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    /// Basis indices that locate the failure, when the error carries them.
    pub fn indices(&self) -> Vec<usize> {
        match self {
            Error::NotBalanced { relation } => vec![*relation],
            Error::NotMultiplicative(i, j) => vec![*i, *j],
            Error::NotInvariant { vector, action } => vec![*vector, *action],
            _ => Vec::new(),
        }
    }
}
