use thiserror::Error;

/// Coarse failure categories. The CLI maps these onto process exit codes,
/// so every constructor site should pick the category deliberately.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed input text (complex files, chain files, manifests).
    Parse,
    /// A mathematical precondition of an operation does not hold.
    Precondition,
    /// An identity that must hold by construction failed. Always a bug
    /// or numerically impossible input; never silently ignored.
    Invariant,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("non-manifold input: {0}")]
    NonManifold(String),

    #[error("orientation: {0}")]
    Orientation(String),

    #[error("dangling vertex reference: {0}")]
    DanglingVertex(String),

    #[error("degree out of range: {0}")]
    DegreeOutOfRange(String),

    #[error("chain belongs to a different complex")]
    ComplexMismatch,

    #[error("side or degree mismatch: {0}")]
    SideMismatch(String),

    #[error("not a cycle: boundary is nonzero on {0}")]
    NotACycle(String),

    #[error("cycle is not null-homologous: {0}")]
    NotTrivial(String),

    #[error("supports are not disjoint: {0}")]
    SupportOverlap(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        use Error::*;
        match self {
            Parse(_) | DanglingVertex(_) => ErrorKind::Parse,
            NonManifold(_)
            | Orientation(_)
            | DegreeOutOfRange(_)
            | ComplexMismatch
            | SideMismatch(_)
            | NotACycle(_)
            | NotTrivial(_)
            | SupportOverlap(_)
            | Precondition(_) => ErrorKind::Precondition,
            Invariant(_) => ErrorKind::Invariant,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
