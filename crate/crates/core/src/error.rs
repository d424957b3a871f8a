use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A nonzero mean coefficient where a zero-mean function is required.
    #[error("function has mean coefficient c_0 = {c0} and lies outside the zero-mean space")]
    NotZeroMean { c0: f64 },

    #[error("{name} = {value} is outside {domain}")]
    OutOfDomain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("coefficients are not Hermitian symmetric at frequency {freq}")]
    NotHermitian { freq: i64 },

    #[error("coefficient at frequency {freq} is not finite")]
    NonFinite { freq: i64 },

    #[error("pulse support [{start}, {end}) wraps around the circle")]
    Wraparound { start: f64, end: f64 },

    #[error("grid of {grid} points aliases truncation {trunc}; need at least {}", 2 * trunc + 1)]
    Aliasing { grid: usize, trunc: usize },

    #[error("duplicate point {0} in point set")]
    DuplicatePoint(f64),

    #[error("Cholesky factorization failed after jitter {jitter:e}; most negative eigenvalue {min_eigenvalue:e}")]
    Factorization { jitter: f64, min_eigenvalue: f64 },

    #[error("{got} replicates requested, at least {min} required")]
    TooFewReplicates { got: usize, min: usize },

    #[error("test functions are not orthogonal: (f, g) = {inner:e} exceeds {tol:e}")]
    NotOrthogonal { inner: f64, tol: f64 },

    #[error("test function has zero norm")]
    ZeroNorm,

    #[error("white noise has no pointwise sample path; pair it with a test function instead")]
    NoPointwisePath,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
