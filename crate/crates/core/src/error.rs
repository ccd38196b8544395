use std::path::PathBuf;

/// Errors produced by the transforms, the function catalog and the CLI front end.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{what} = {value} is outside the domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("cannot parse function spec at `{token}`: {reason}")]
    Parse { token: String, reason: String },

    #[error("cannot read {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("invalid function spec: {0}")]
    Validation(String),

    #[error("requested {n} coefficients from a grid of {m} samples; need n <= m/2")]
    Aliasing { n: usize, m: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("non-finite value at index {index}")]
    NonFinite { index: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
