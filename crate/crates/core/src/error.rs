use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch in {op}: {left:?} vs {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is not invertible over the integers (determinant {0})")]
    NotUnimodular(BigInt),

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid circulant spec: {0}")]
    InvalidCirculant(String),

    #[error("Laurent polynomial {0} is not bimonic")]
    NotBimonic(String),

    #[error("polynomial division left a nonzero remainder: {0}")]
    InexactDivision(String),

    #[error(
        "enumeration guard exceeded: {vertices} vertices / {edges} edges \
         (limits {max_vertices} vertices / {max_edges} edges)"
    )]
    GuardExceeded {
        vertices: usize,
        edges: usize,
        max_vertices: usize,
        max_edges: usize,
    },

    #[error("{what} requires n >= {min}, got {n}")]
    Domain {
        what: &'static str,
        n: u64,
        min: u64,
    },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
