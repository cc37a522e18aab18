use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A point was evaluated outside the declared support.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("argument error: {0}")]
    Argument(String),

    /// An object could not be built because an assumption (positive
    /// degrees, kernel lower bound, symmetric input) does not hold.
    #[error("construction error: {0}")]
    Construction(String),

    #[error("numerical error: {0}")]
    Numerical(String),

    /// The requested eigenvalue sits in (or too close to) the essential
    /// spectrum, where no eigenfunction extension exists.
    #[error("essential spectrum: eigenvalue {lambda} is within [{lo}, {hi}] (margin {margin})")]
    EssentialSpectrum {
        lambda: f64,
        lo: f64,
        hi: f64,
        margin: f64,
    },

    #[error("scenario error: {0}")]
    Scenario(String),

    #[error("usage error in `{field}`: {message}")]
    Usage { field: String, message: String },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code: 2 usage, 3 scenario or precondition, 4 numerical.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Usage { .. } | Error::Argument(_) => 2,
            Error::Numerical(_) => 4,
            _ => 3,
        }
    }

    pub(crate) fn usage(field: &str, message: impl Into<String>) -> Self {
        Error::Usage {
            field: field.to_string(),
            message: message.into(),
        }
    }
}
