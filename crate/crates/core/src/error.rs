//! Error types shared across the crate.

use num_complex::Complex64 as C64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian: ‖H − H†‖ = {deviation:.3e} exceeds {tolerance:.3e}")]
    NonHermitian { deviation: f64, tolerance: f64 },

    #[error("defective or near-defective matrix: {0}")]
    Defective(String),

    #[error("steady state is not unique: {0}")]
    NonUniqueSteadyState(String),

    #[error("no nullspace found: smallest |eigenvalue| = {smallest:.3e} exceeds {threshold:.3e}")]
    NoNullspace { smallest: f64, threshold: f64 },

    #[error("resonant parameter value; steady state not unique at v = {v:.6e} (1 + λv = {denom:.3e} for λ = {lambda})")]
    Pole { v: f64, lambda: C64, denom: f64 },

    #[error("singular linear system: {0}")]
    Singular(String),

    #[error("principal-value case: eigenvalue {lambda} has no imaginary part; the closed-form average is undefined")]
    PrincipalValue { lambda: C64 },

    #[error("branch selection failed: closed form deviates from quadrature by {mismatch:.3e} for λ = {lambda}")]
    BranchCheck { lambda: C64, mismatch: f64 },

    #[error("quadrature did not converge: estimated error {estimate:.3e} exceeds {tolerance:.3e}")]
    QuadratureNonConvergence { estimate: f64, tolerance: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("unknown model `{0}`")]
    UnknownModel(String),

    #[error("linear algebra backend error: {0}")]
    Backend(String),
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Backend(e.to_string())
    }
}

impl Error {
    /// True for failures caused solely by a resonance `1 + λv = 0`.
    pub fn is_pole(&self) -> bool {
        matches!(self, Error::Pole { .. })
    }
}
