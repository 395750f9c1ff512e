//! Error type shared across the toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the toolkit, grouped by category.
///
/// [`Error::category`] gives a short machine-readable tag for each variant,
/// used by the CLI when reporting errors on stderr.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument is outside the mathematical domain of the operation
    /// (non-finite phase, nonpositive resistance, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The bias leaves no metastable well (`I_b >= I_c`); trap quantities
    /// such as extrema, barrier height and plasma frequency are undefined.
    #[error("no potential well at bias ratio {ratio}: {context}")]
    NoWell { ratio: f64, context: String },

    /// A grid or time step is too coarse for the requested computation.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// An iterative numerical procedure failed to converge or produced an
    /// inconsistent result.
    #[error("numerical error: {0}")]
    Numerical(String),

    /// A level or parameter index refers to an unbound or missing state.
    #[error("range error: {0}")]
    Range(String),

    /// The requested configuration is valid input but not supported by the
    /// closed forms implemented here (e.g. asymmetric fermion couplings).
    #[error("unsupported configuration: {0}")]
    Unsupported(String),

    /// Required model data is missing (e.g. normal resistance for RCSJ).
    #[error("configuration error: {0}")]
    Config(String),

    /// A fit problem has no usable solution (no interior peak, degenerate
    /// histogram, ...).
    #[error("ill-posed fit: {0}")]
    IllPosed(String),

    /// Malformed CSV/JSON/config input. `line` is 1-based when known.
    #[error("parse error{}: {message}", match .line { Some(l) => format!(" at line {l}"), None => String::new() })]
    Parse { message: String, line: Option<usize> },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn no_well(ratio: f64, context: impl Into<String>) -> Self {
        Error::NoWell {
            ratio,
            context: context.into(),
        }
    }

    pub fn parse(msg: impl Into<String>, line: Option<usize>) -> Self {
        Error::Parse {
            message: msg.into(),
            line,
        }
    }

    /// Machine-readable category tag.
    pub fn category(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::NoWell { .. } => "no-well",
            Error::Resolution(_) => "resolution",
            Error::Numerical(_) => "numerical",
            Error::Range(_) => "range",
            Error::Unsupported(_) => "unsupported",
            Error::Config(_) => "config",
            Error::IllPosed(_) => "ill-posed",
            Error::Parse { .. } => "parse",
            Error::Io(_) => "io",
        }
    }
}
