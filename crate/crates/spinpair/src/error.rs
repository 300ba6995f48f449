use std::path::PathBuf;

/// Errors produced by the spinpair library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("non-finite model parameter {name} = {value}")]
    NonFiniteParam { name: &'static str, value: f64 },

    #[error("temperature must be positive and finite, got kT = {0}")]
    InvalidTemperature(f64),

    #[error("matrix is not Hermitian (max |m[i][j] - conj(m[j][i])| = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("not a valid density matrix: {0}")]
    InvalidDensityMatrix(String),

    #[error("matrix is not unitary (max |u u\u{2020} - 1| = {deviation:.3e})")]
    NotUnitary { deviation: f64 },

    #[error("model case {given} does not match parameters classified as {classified}")]
    CaseMismatch { given: String, classified: String },

    #[error("no closed-form concurrence is cataloged for {0}")]
    NoClosedForm(String),

    #[error("threshold solver failed: {0}")]
    Solver(String),

    #[error("invalid sweep configuration in `{field}`: {reason}")]
    Config { field: String, reason: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
