use thiserror::Error;

/// Errors produced by the simulation and analysis routines.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A parameter is outside its physical domain (non-positive length,
    /// odd grid size, efficiency outside [0, 1], ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested feature is too narrow for the configured grid.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// Tabulated data does not cover the lattice it must be mapped onto.
    #[error("coverage error: {0}")]
    Coverage(String),

    /// A numerical routine failed to converge or produced non-finite values.
    #[error("numeric error{}: {message}", section.map(|s| format!(" (section {s})")).unwrap_or_default())]
    Numeric {
        section: Option<usize>,
        message: String,
    },

    /// Input violates a structural invariant it is required to satisfy
    /// (e.g. Bogoliubov identities before a Schmidt decomposition).
    #[error("integrity error: {0}")]
    Integrity(String),

    /// Post-processing cannot recover the quantity of interest
    /// (e.g. the seed-line mask swallows the broadband pedestal).
    #[error("post-processing error: {0}")]
    PostProcessing(String),

    /// The data are structurally valid but insufficient for the requested
    /// analysis (ridge too short, no fringes, overlapping sidebands).
    #[error("insufficient data: {0}")]
    InsufficientData(String),

    /// A fit could not be carried out (non-bracketing interval,
    /// non-convergence).
    #[error("fit error: {0}")]
    Fit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
