use thiserror::Error;

/// Errors produced by the library. Variants carry a witness where one exists.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rotation: {0}")]
    MalformedRotation(String),
    #[error("graph is not connected")]
    Disconnected,
    #[error("vertex {vertex} out of range (vertex count {count})")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("invalid sign {0}: expected 1 or -1")]
    InvalidSign(i64),
    #[error("cycle is not simple: vertex {0} repeats")]
    NotSimple(usize),
    #[error("dart sequence is not a closed walk: {0}")]
    NotACycle(String),
    #[error("walk is not the boundary of a face")]
    NotAFace,
    #[error("edge subset has odd degree at vertex {0}")]
    OddDegree(usize),
    #[error("cycle separates the surface")]
    Separating,
    #[error("no distance-1 vertices around the chosen faces")]
    EmptyLevel,
    #[error("face index {0} out of range")]
    FaceOutOfRange(usize),
    #[error("embedding lies on the sphere: no non-separating cycle exists")]
    SphereEmbedding,
    #[error("vertex {0} does not occur on the face")]
    NotOnFace(usize),
    #[error("invalid crossing at vertex {vertex}: {reason}")]
    InvalidCrossing { vertex: usize, reason: String },
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("search cap {0} exceeded")]
    CapExceeded(usize),
    #[error("path normalization did not converge after {0} reroutes")]
    NormalizationFailed(usize),
    #[error("distance {distance} between path endpoints exceeds 2R = {}", 2 * radius)]
    TooFar { distance: usize, radius: usize },
    #[error("at least two centers are needed")]
    NoCrossingPair,
    #[error("centers must be distinct vertices")]
    DuplicateCenter,
    #[error("diameter {diameter} exceeds 2R = {}", 2 * radius)]
    DiameterExceeded { diameter: usize, radius: usize },
    #[error("search oscillated between nodes {0} and {1}")]
    OscillationDetected(usize, usize),
    #[error("bags do not cover vertex {0}")]
    NotCovering(usize),
    #[error("edge ({0}, {1}) is not contained in any bag")]
    EdgeUnhoused(usize, usize),
    #[error("vertex {vertex} breaks running intersection: in bags {a} and {c} but not {b}")]
    NotRunningIntersection {
        vertex: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    #[error("decomposition tree is malformed: {0}")]
    MalformedTree(String),
    #[error("parameter out of range: {0}")]
    ParamRange(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
