use thiserror::Error;

/// Errors produced by graph construction, index evaluation and verification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex id {id} out of range for a graph with {vertex_count} vertices")]
    IdOutOfRange { id: usize, vertex_count: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("hexagonal system is empty")]
    EmptySystem,

    #[error("hexagonal system is not connected ({components} components)")]
    DisconnectedSystem { components: usize },

    #[error("hexagon ({q}, {r}) listed more than once")]
    DuplicateHex { q: i64, r: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("profile has {profile_len} entries but the graph has {vertex_count} vertices")]
    ProfileMismatch {
        profile_len: usize,
        vertex_count: usize,
    },

    #[error("{kind} is a classical index and needs a k=1 profile, got k={k}")]
    ClassicalNeedsDegreeProfile { kind: &'static str, k: u32 },

    #[error("{0} has no closed form")]
    UnknownKind(&'static str),

    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("unknown token `{0}`")]
    UnknownToken(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
