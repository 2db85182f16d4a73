use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("timestep {t} out of range 1..={steps}")]
    TimestepOutOfRange { t: usize, steps: usize },

    #[error("empty input")]
    EmptyInput,

    #[error("selection budget {budget} out of range 1..={pool}")]
    BudgetOutOfRange { budget: usize, pool: usize },

    #[error("degenerate calibration: score spread {sigma:e} below 1e-12")]
    DegenerateCalibration { sigma: f64 },

    #[error("bad magic bytes (expected \"UFTJ\")")]
    BadMagic,

    #[error("unsupported trajectory format version {found} (expected {expected})")]
    UnsupportedVersion { found: u32, expected: u32 },

    #[error("truncated input: needed {needed} bytes, had {available}")]
    Truncated { needed: u64, available: u64 },

    #[error("{0} trailing bytes after payload")]
    TrailingBytes(usize),

    #[error("invalid header field {field}: {value}")]
    InvalidHeader { field: &'static str, value: u64 },

    #[error("non-finite value in float payload")]
    NonFinite,

    #[error("invalid label byte {0} (expected 0, 1, or 2)")]
    InvalidLabel(u8),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
