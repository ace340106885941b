use thiserror::Error;

/// Errors across the workbench. Exact checks that fail raise
/// [`Error::CheckFailed`] with the counterexample rendered into the message;
/// they are hard failures, never tolerances.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("dependent or zero basis: rank {rank} over {count} vectors")]
    DependentBasis { rank: usize, count: usize },

    #[error("not closed under bracket: {0}")]
    NotClosed(String),

    #[error("degenerate Killing form (rank {rank} < dim {dim})")]
    DegenerateKilling { rank: usize, dim: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("operator not diagonalizable over given spectrum: {0}")]
    NotDiagonalizable(String),

    #[error("parameter out of range: {0}")]
    BadParams(String),

    #[error("zero isotropy rejected")]
    ZeroIsotropy,

    #[error("element outside required component: {0}")]
    WrongComponent(String),

    #[error("sl2 relations violated: {0}")]
    Sl2Violated(String),

    #[error("eigenvalue outside allowed set: {0}")]
    SpectrumViolation(String),

    #[error("rational normalization obstruction: {0}")]
    RationalObstruction(String),

    #[error("exact check failed: {0}")]
    CheckFailed(String),

    #[error("unknown model spec: {0}")]
    UnknownModel(String),

    #[error("zoo configuration: {0}")]
    Zoo(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
