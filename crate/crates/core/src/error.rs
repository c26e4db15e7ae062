use crate::matcore::IndexSet;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("index set contains duplicates")]
    DuplicateIndex,

    #[error("matrix is not square: {rows} rows, {cols} cols")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix entries must be finite")]
    NonFinite,

    #[error("input asymmetry {max_asymmetry:e} exceeds the 1e-12 ingestion limit")]
    Asymmetric { max_asymmetry: f64 },

    #[error("matrix is not positive definite (min eigenvalue {min_eigenvalue:e})")]
    NotPositiveDefinite { min_eigenvalue: f64 },

    #[error("selection size mismatch: |A| = {rows}, |B| = {cols}")]
    SelectionSizeMismatch { rows: usize, cols: usize },

    #[error("invalid tolerances: {0}")]
    InvalidTolerances(String),

    #[error("dimension {dim} too small: need at least {needed}")]
    DimensionTooSmall { dim: usize, needed: usize },

    #[error("subset size {size} exceeds dimension {dim}")]
    SubsetTooLarge { size: usize, dim: usize },

    #[error("factor count {m} unsupported here (expected {expected})")]
    UnsupportedFactorCount { m: usize, expected: &'static str },

    #[error("numeric rank {found} violates the required rank {expected}")]
    RankPrecondition { expected: usize, found: usize },

    #[error("Gram matrices disagree beyond tolerance (max deviation {max_dev:e})")]
    GramMismatch { max_dev: f64 },

    #[error("overlapping loading rows disagree beyond tolerance (max deviation {max_dev:e})")]
    OverlapMismatch { max_dev: f64 },

    #[error("no non-singular off-diagonal minor available for the glue step")]
    SingularGlueMinor,

    #[error("glued corner entry deviates by {dev:e} from the target matrix")]
    CornerMismatch { dev: f64 },

    #[error("glued representation misses the target matrix by {max_err:e}")]
    GlueReconstruction { max_err: f64 },

    #[error("forced diagonal value deviates by {dev:e} from the supplied entry")]
    ForcedDiagonalMismatch { dev: f64 },

    #[error("reduced decision rejected the input (first failing subset {subset:?})")]
    ReducedPrecondition { subset: Option<IndexSet> },

    #[error("construction dead-ended at {step}: {detail}")]
    ConstructionDeadEnd { step: String, detail: String },

    #[error("rejection budget exhausted after {attempts} draws; spec is too tight")]
    RejectionBudget { attempts: usize },

    #[error("invalid generator spec: {0}")]
    InvalidGenSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
