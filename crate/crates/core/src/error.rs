use thiserror::Error;

/// Errors raised while validating or evaluating protocol objects.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix contains non-finite entries")]
    NonFinite,

    #[error("not Hermitian: max |M - M^dagger| = {residual:e}")]
    NotHermitian { residual: f64 },

    #[error("not positive semidefinite: min eigenvalue {min_eigenvalue:e}")]
    NotPsd { min_eigenvalue: f64 },

    #[error("trace {trace} exceeds 1")]
    TraceTooLarge { trace: f64 },

    #[error("vector is not normalized: norm {norm}")]
    NotNormalized { norm: f64 },

    #[error("not a density operator: {invariant} (residual {residual:e})")]
    NotDensity { invariant: &'static str, residual: f64 },

    #[error("not a POVM element: {invariant} (residual {residual:e})")]
    NotPovmElement { invariant: &'static str, residual: f64 },

    #[error("fairness violated: Tr(rho E0) = {trace}, |Tr(rho E0) - 1/2| = {residual:e}")]
    FairnessViolation { trace: f64, residual: f64 },

    #[error("{parameter} = {value} outside {interval}")]
    OutOfRange {
        parameter: &'static str,
        value: f64,
        interval: &'static str,
    },

    #[error("degenerate instance: {0}")]
    DegenerateInstance(String),

    #[error("invalid strategy: {0}")]
    InvalidStrategy(String),

    #[error("scale limit exceeded: {0}")]
    ScaleLimit(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
