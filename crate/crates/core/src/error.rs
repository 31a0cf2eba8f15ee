use thiserror::Error;

/// Errors surfaced by the orbit, character, index and reduction layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// The orbit fed to `qspin_orbit` is not admissible.
    #[error("orbit {0} is not admissible")]
    NotAdmissible(String),

    /// A stated precondition does not hold (e.g. `magical_check` requires a
    /// very regular first argument).
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    /// The polarizing covector pairs to zero with some tangent weight.
    #[error("polarization is not generic: weight {weight} pairs to zero")]
    NonGenericPolarization { weight: String },

    /// Zero-set component structure the decomposition cannot handle.
    #[error("unhandled component geometry: {0}")]
    UnhandledComponentGeometry(String),

    /// `holomorphic_induct` needs a formal character with finite support.
    #[error("formal character has infinite support (cone terms present)")]
    InfiniteSupport,

    /// An ancestor orbit has no slice data attached.
    #[error("missing slice data for ancestor orbit {0}")]
    MissingAncestorData(String),

    /// Unknown example descriptor.
    #[error("unknown example descriptor: {0}")]
    UnknownDescriptor(String),

    /// A Duistermaat-Heckman query point lies on a cone wall.
    #[error("query point lies on a cone wall")]
    OnWall,

    /// Malformed input (bad group tag, ragged matrix, rank mismatch...).
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
