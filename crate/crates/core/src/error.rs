use thiserror::Error;

/// Malformed input to the graph-core operations.
///
/// `NoPositiveKernel` is deliberately not here: it is an ordinary
/// [`KernelSolution`](crate::KernelSolution) outcome.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("a cycle needs at least 3 vertices and a path at least 2, got {0}")]
    InvalidSize(usize),
    #[error("expected {expected} labels, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("label at vertex {vertex} must be positive")]
    NonPositiveEntry { vertex: usize },
    #[error("r-labels must have gcd 1, found gcd {0}")]
    NotPrimitive(alloc::string::String),
    #[error("r_{vertex} does not divide the sum of its neighbours' labels")]
    NonIntegralQuotient { vertex: usize },
    #[error("d-label at vertex {vertex} exceeds the 64-bit range")]
    Overflow { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("operation is only defined on cycles")]
    NotACycle,
    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("cannot smooth at vertex {vertex}: its d-label is {label}, not 1")]
    SmoothAtNonUnit { vertex: usize, label: u64 },
    #[error("cannot smooth a 3-cycle")]
    SizeTooSmall,
    #[error("input is not a valid arithmetical structure")]
    InvalidStructure,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("n = {n} is below the minimum {min} for this family")]
    TooSmall { n: usize, min: usize },
    #[error("d-cap {cap} is below the required minimum {min}")]
    DCapTooSmall { cap: u64, min: u64 },
    #[error("catalog for n = {got} cannot be used as the predecessor of n = {want}")]
    WrongPredecessor { got: usize, want: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectraError {
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("Rayleigh quotient of the zero vector")]
    ZeroVector,
    #[error("vector has length {got}, matrix has order {order}")]
    DimensionMismatch { order: usize, got: usize },
    #[error("matrix of order 0")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TheoremError {
    #[error("no catalog available for n = {0}")]
    CatalogMissing(usize),
    #[error(transparent)]
    Enumeration(#[from] EnumerationError),
    #[error(transparent)]
    Spectra(#[from] SpectraError),
}
