use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (||a - a*||_F = {residual:e})")]
    NotHermitian { residual: f64 },

    #[error("matrix is not positive (min eigenvalue {min_eigenvalue:e})")]
    NotPositive { min_eigenvalue: f64 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("radius condition violated at index {index}: distance {distance:e} > radius {radius:e}")]
    RadiusViolated {
        index: usize,
        distance: f64,
        radius: f64,
    },

    #[error("witness direction is not a unit vector (norm {norm:e})")]
    NotUnit { norm: f64 },

    #[error("transform index m = {m} outside 1..={n}")]
    BadIndex { m: usize, n: usize },

    #[error("omega * m = {omega}*{m} is a multiple of pi")]
    Singular { omega: f64, m: usize },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
