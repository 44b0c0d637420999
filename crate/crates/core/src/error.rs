use thiserror::Error;

use crate::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ideals live in different variable contexts")]
    ContextMismatch,

    #[error("variable contexts overlap in `{0}`")]
    OverlappingVariables(String),

    #[error("invalid variable context: {0}")]
    InvalidContext(String),

    #[error("{0} is undefined for the zero ideal")]
    ZeroIdeal(&'static str),

    #[error("{0} is undefined for the unit ideal")]
    UnitIdeal(&'static str),

    #[error("exponent matrix has a zero column at index {0}")]
    ZeroColumn(usize),

    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(Rational),

    #[error("ideal is not squarefree")]
    NotSquarefree,

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid rational number `{0}`")]
    InvalidRational(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The integrality hypothesis `nu*_a(I) in Z` fails; `vertex` is a
    /// non-integral vertex of the dual polyhedron.
    #[error("hypothesis fails: dual polyhedron has non-integral vertex ({})", format_vertex(.vertex))]
    NonIntegralVertex { vertex: Vec<Rational> },
}

fn format_vertex(v: &[Rational]) -> String {
    v.iter()
        .map(|q| q.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
