use arithstruct::{EnumerationError, SpectraError, StructureError, TheoremError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    CapExceeded(String),
    #[error("not an arithmetical structure: {0}")]
    InvalidStructure(String),
    #[error("verification failed")]
    VerificationFailed,
    #[error("spectral computation failed: {0}")]
    Spectra(#[from] SpectraError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::CapExceeded(_) => 3,
            CliError::InvalidStructure(_) => 4,
            CliError::VerificationFailed | CliError::Spectra(_) | CliError::Io(_) | CliError::Json(_) => 1,
        }
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        match e {
            EnumerationError::CapExceeded { .. } => CliError::CapExceeded(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<StructureError> for CliError {
    fn from(e: StructureError) -> Self {
        match e {
            StructureError::InvalidSize(_) => CliError::Usage(e.to_string()),
            _ => CliError::InvalidStructure(e.to_string()),
        }
    }
}

impl From<TheoremError> for CliError {
    fn from(e: TheoremError) -> Self {
        match e {
            TheoremError::Enumeration(inner) => inner.into(),
            TheoremError::Spectra(inner) => inner.into(),
            TheoremError::CatalogMissing(n) => CliError::Usage(format!("no catalog for n = {n}")),
        }
    }
}
