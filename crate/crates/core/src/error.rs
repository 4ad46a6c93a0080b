use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dipole moment must be positive, got {0} D")]
    InvalidDipole(f64),

    #[error("intensity must be finite and nonnegative, got {0} W/cm^2")]
    InvalidIntensity(f64),

    #[error("control Rabi frequency is zero; dressed coefficients are undefined (use the uncontrolled profile)")]
    DegenerateCoupling,

    #[error("singular 2x2 matrix (|det| = {0:e})")]
    SingularMatrix(f64),

    #[error("spectator detuning is zero; the line is resonant with the control")]
    ResonantInput,

    #[error("{0}")]
    Domain(String),

    #[error("line list row {row}, column `{column}`: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },

    #[error("line `{line}` is matched by more than one control")]
    AmbiguousControl { line: String },

    #[error("selector `{0}` matches no line in the catalog")]
    UnresolvedSelector(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("unknown scenario `{name}`; available: {}", available.join(", "))]
    UnknownScenario { name: String, available: Vec<String> },

    #[error("invalid scenario config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::SingularMatrix(_) | Error::DegenerateCoupling | Error::ResonantInput
        )
    }
}
