use thiserror::Error;

/// Everything that can go wrong when constructing contexts or combining elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least {min}, got {genus}")]
    GenusTooSmall { genus: u32, min: u32 },

    #[error("gonality must satisfy 2 <= d <= g+1, got d={gonality} for genus {genus}")]
    GonalityOutOfRange { genus: u32, gonality: u32 },

    #[error("elements belong to different contexts")]
    ContextMismatch,

    #[error("{what} must lie in {min}..={max}, got {value}")]
    IndexOutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("bridge nodes must be pairwise distinct, {0} repeats")]
    DuplicateNode(i64),

    #[error("bridge nodes must be nonzero")]
    ZeroNode,

    #[error("expected {expected} bridge nodes for this context, got {got}")]
    NodeCountMismatch { expected: usize, got: usize },

    #[error("tuple entries must be nonzero")]
    ZeroTupleEntry,

    #[error("intersection numbers require a class of top codimension")]
    NotTopCodimension,
}

pub type Result<T> = std::result::Result<T, Error>;
