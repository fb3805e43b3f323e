use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid slope {0}: coordinates must be coprime and not both zero")]
    InvalidSlope(String),
    #[error("invalid multicurve: {0}")]
    InvalidMulticurve(String),
    #[error("ambiguous orientation in double curve sum: {0}")]
    AmbiguousOrientation(String),
    #[error("basis change matrix must have determinant +1 or -1, got {0}")]
    NotUnimodular(String),
    #[error("inconsistent intersection data: {0}")]
    InconsistentIntersection(String),
    #[error("invalid surface: {0}")]
    InvalidSurface(String),
    #[error("unresolved reference: {0}")]
    Reference(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("malformed graph: {0}")]
    Structure(String),
    #[error("unknown edge {0}")]
    UnknownEdge(usize),
    #[error("unknown vertex {0}")]
    UnknownVertex(u32),
    #[error("not a Gabai-disc graph: {0}")]
    NotGabai(String),
    #[error("no Scharlemann cycle found: {0}")]
    Counterexample(String),
    #[error("degenerate tube crossing: {0}")]
    DegenerateCrossing(String),
    #[error("inconsistent scenario: {0}")]
    InconsistentScenario(String),
    #[error("invalid enumeration bounds: {0}")]
    Bounds(String),
}
