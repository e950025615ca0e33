use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("genes are not an antichain: {0}")]
    NotAntichain(String),
    #[error("invalid length vector: {0}")]
    InvalidLengths(String),
    #[error("length vector is not generic: {0} sums to half the perimeter")]
    NotGeneric(String),
    #[error("the polygon space is empty: side {0} is longer than all the others together")]
    EmptySpace(u32),
    #[error("genetic code {0} is not realized by any generic length vector")]
    NotRealizable(String),
    #[error("{what} = {got} exceeds the supported limit {limit}")]
    SizeLimit {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("genetic code {0} describes a disconnected space")]
    Disconnected(String),
    #[error("no pair of gees admits a partition of [{0}]")]
    NoPartition(u32),
    #[error("search budget of {0} partial products exceeded")]
    BudgetExceeded(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("isomorphism check failed: {0}")]
    IsoViolation(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
