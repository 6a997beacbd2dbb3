use thiserror::Error;

/// Errors raised by the library. Ray labels in variants are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive direction")]
    ZeroVector,
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitiveVector(i64, i64),

    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("matrix is singular")]
    Singular,

    #[error("a complete fan needs at least 3 rays, got {0}")]
    TooFewRays(usize),
    #[error("ray {0} is not a primitive lattice vector")]
    NotPrimitive(usize),
    #[error("rays {0} and {1} coincide")]
    DuplicateRay(usize, usize),
    #[error("rays {0} and {next} are not in strict counterclockwise order", next = .1)]
    NotCounterclockwise(usize, usize),
    #[error("rays wind {0} times around the origin, expected once")]
    NotComplete(usize),
    #[error("ray label {label} out of range 1..={len}")]
    IndexOutOfRange { label: usize, len: usize },
    #[error("fan is not normalized: ray n+1 must be (1, 0)")]
    NotNormalized,
    #[error("coordinate overflow while transforming rays")]
    Overflow,

    #[error("polygon needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("polygon vertices {0} and {1} coincide")]
    RepeatedVertex(usize, usize),
    #[error("polygon is degenerate at vertex {0} (collinear edges)")]
    DegeneratePolygon(usize),
    #[error("polygon is not strictly convex and counterclockwise at vertex {0}")]
    NotConvex(usize),

    #[error("this operation requires ray n+2 = (0, 1)")]
    SmoothVertexRequired,
    #[error("kappa rescaling needs a positive first coordinate on ray n+2, got {0}")]
    UnsupportedOrientation(i64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("could not generate a complete fan after {0} attempts")]
    GenerationFailed(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
