use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QentError {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("matrix is not Hermitian (max |H - H^dagger| = {0:.3e})")]
    NotHermitian(f64),

    #[error("hermiticity violation: max |rho - rho^dagger| = {0:.3e}")]
    HermiticityViolation(f64),

    #[error("trace violation: |Tr(rho) - 1| = {0:.3e}")]
    TraceViolation(f64),

    #[error("negativity violation: minimum eigenvalue {0:.3e}")]
    NegativityViolation(f64),

    #[error("operator is positive semidefinite (minimum eigenvalue {0:.3e}), not a witness")]
    NotAWitness(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("state is not normalized: |sum of squares - 1| = {0:.3e}")]
    Normalization(f64),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("three-tangle is {0:.3e}; the state is not in the GHZ class")]
    NotGhzClass(f64),

    #[error("empty selection: {0}")]
    Empty(String),
}

pub type Result<T> = std::result::Result<T, QentError>;
