use thiserror::Error;

/// Errors raised by the library. Every operation is exact, so there is no
/// "approximate" failure mode: either an answer is computed or one of these
/// is returned.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix does not have full row rank (rank {rank} < {rows})")]
    NotFullRank { rank: usize, rows: usize },

    #[error("index set {0:?} is not a basis")]
    NotABasis(Vec<usize>),

    #[error("index {index} out of range for {len} columns")]
    BadIndex { index: usize, len: usize },

    #[error("{what}: size {size} exceeds cap {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("basis {0:?} is not multiplicative")]
    NotMultiplicative(Vec<usize>),

    #[error("not weakly multiplicative: no multiplicative basis exists")]
    NotWeaklyMultiplicative,

    #[error("coordinatizing path does not match the incidence graph: {0}")]
    PathMismatch(String),

    #[error("invalid elimination order: {0}")]
    BadEliminationOrder(String),

    #[error("edge endpoints lie in different forest components")]
    NotSameComponent,

    #[error("edge already belongs to the forest")]
    EdgeInForest,

    #[error("point does not lie on the flat")]
    NotOnFlat,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
