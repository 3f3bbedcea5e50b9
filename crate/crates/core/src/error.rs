use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unimodular (determinant {det})")]
    NotUnimodular { det: BigInt },
    #[error("matrix is not skew-symmetric at ({row}, {col})")]
    NotSkewSymmetric { row: usize, col: usize },
    #[error("index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("negative multiplicity {value} at ({row}, {col}) of {which}")]
    NegativeMultiplicity {
        which: &'static str,
        row: usize,
        col: usize,
        value: BigInt,
    },
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("labels do not match: {0}")]
    LabelMismatch(String),
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("triangulation of a {m}-gon needs {expected} diagonals, found {found}")]
    WrongCount {
        m: usize,
        expected: usize,
        found: usize,
    },
    #[error("diagonals {0:?} and {1:?} cross")]
    Crossing((usize, usize), (usize, usize)),
    #[error("{0:?} is not a diagonal of the {1}-gon")]
    BoundaryEdge((usize, usize), usize),
    #[error("diagonal {0:?} listed twice")]
    DuplicateDiagonal((usize, usize)),
    #[error("{0:?} is not a diagonal of this triangulation")]
    NotADiagonal((usize, usize)),
    #[error("polygons differ: {0}-gon vs {1}-gon")]
    PolygonMismatch(usize, usize),
    #[error("a polygon needs at least 4 vertices, got {0}")]
    PolygonTooSmall(usize),
    #[error("flip-graph search exceeded {0} states")]
    SearchLimit(usize),
}
