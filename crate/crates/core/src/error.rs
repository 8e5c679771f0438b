use thiserror::Error;

/// Errors raised by the numerical kernels and state constructors.
///
/// Payloads are stored as f64 regardless of the scalar type in use so the
/// error type stays non-generic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("index ({row}, {col}) out of bounds for dimension {dim}")]
    IndexOutOfBounds { row: usize, col: usize, dim: usize },
    #[error("matrix is not positive semidefinite (eigenvalue {eigenvalue:e})")]
    NotPositive { eigenvalue: f64 },
    #[error("trace is {trace}, expected 1")]
    BadTrace { trace: f64 },
    #[error("dimension {0} is not a power of two")]
    NotQubitDimension(usize),
    #[error("matrix is not unitary (‖U†U - I‖_F = {deviation:e})")]
    NotUnitary { deviation: f64 },
    #[error("argument outside its domain: {0}")]
    DomainError(String),
    #[error("unknown qubit label '{0}'")]
    UnknownLabel(char),
    #[error("qubit labelings {from:?} and {to:?} are not permutations of each other")]
    LabelMismatch { from: Vec<char>, to: Vec<char> },
    #[error("unsupported dimension {0} (at most 8)")]
    UnsupportedDim(usize),
    #[error("expected a {expected}-qubit state, found {found} qubits")]
    WrongArity { expected: usize, found: usize },
    #[error("energy has non-negligible imaginary part {imag:e}")]
    NonRealEnergy { imag: f64 },
    #[error("need at least {needed} samples, found {found}")]
    TooFewSamples { needed: usize, found: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
