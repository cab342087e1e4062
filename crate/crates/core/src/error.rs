use std::path::PathBuf;

use crate::exprparse::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid precision: {digits} decimal digits requested, minimum is {min}")]
    InvalidPrecision { digits: u32, min: u32 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("transform singularity at s = {s}")]
    Singularity { s: String },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("series for {what} did not converge within {iterations} terms")]
    Convergence {
        what: &'static str,
        iterations: usize,
    },

    #[error("contour endpoint z = {z} is a removable singularity of the Talbot map")]
    RemovableEndpoint { z: String },

    #[error("length mismatch: {numerical} numerical values vs {exact} exact values")]
    LengthMismatch { numerical: usize, exact: usize },

    #[error("percentage error undefined: every exact value is below the {guard:e} guard")]
    UndefinedPercent { guard: f64 },

    #[error("case {case_id}, {method} at t = {t}: {source}")]
    Point {
        case_id: u32,
        method: String,
        t: String,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    /// True for errors caused by bad user-supplied parameters rather than
    /// failures during evaluation.
    pub fn is_usage(&self) -> bool {
        match self {
            Error::InvalidPrecision { .. } | Error::InvalidParameter(_) | Error::Parse(_) => true,
            Error::Point { source, .. } => source.is_usage(),
            _ => false,
        }
    }

    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }
}
