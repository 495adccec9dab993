use thiserror::Error;

use crate::orthopoly::MAX_DEGREE;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("degree parameter k must be at least 2, got {0}")]
    DegreeTooSmall(u32),
    #[error("polynomial degree {0} exceeds the supported maximum of {MAX_DEGREE}")]
    DegreeTooLarge(usize),
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("graph has {v} vertices, over the cap of {cap}")]
    TooLarge { v: usize, cap: usize },
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph has no cycles")]
    Acyclic,
    #[error("path length {0} exceeds the enumeration guard of 12")]
    PathLengthTooLarge(usize),
    #[error("vertex {vertex} out of range for a graph on {v} vertices")]
    VertexOutOfRange { vertex: usize, v: usize },
    #[error("symmetric eigensolver did not converge")]
    EigenSolver,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("Hoffman identity: {0}")]
    Hoffman(String),
    #[error("certificate is for k = {certificate}, but the graph is {graph}-regular")]
    DegreeMismatch { certificate: u32, graph: u32 },
    #[error("eigenvalue list is empty")]
    EmptySpectrum,
    #[error("invalid eigenvalues: {0}")]
    InvalidEigenvalues(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
