use thiserror::Error;

/// Errors raised by the library. Every variant maps to a stable machine-readable code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface is not hyperbolic: 2g-2+s = {} <= 0 (g={g}, s={s})", 2 * (*g as i64) - 2 + *s as i64)]
    NotHyperbolic { g: u32, s: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("flag does not match surface: {0}")]
    FlagMismatch(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unknown group: {0}")]
    UnknownGroup(String),
    #[error("group is not split: {0}")]
    NotSplit(String),
    #[error("mode not available for this group: {0}")]
    IncompatibleMode(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not equivariant: {0}")]
    NotEquivariant(String),
    #[error("filtration violated: {0}")]
    FiltrationViolation(String),
    #[error("no square root: {0}")]
    NoSquareRoot(String),
    #[error("enumeration needs {needed} tuples, above the cap of {cap}; use closed-form counts or raise the cap")]
    CapExceeded { needed: u128, cap: u64 },
    #[error("count overflows 128 bits: {0}")]
    Overflow(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotHyperbolic { .. } => "not_hyperbolic",
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::InvalidFlag(_) => "invalid_flag",
            Error::FlagMismatch(_) => "flag_mismatch",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::InvalidWeight(_) => "invalid_weight",
            Error::InvalidInput(_) => "invalid_input",
            Error::UnknownGroup(_) => "unknown_group",
            Error::NotSplit(_) => "not_split",
            Error::IncompatibleMode(_) => "incompatible_mode",
            Error::Unsupported(_) => "unsupported",
            Error::NotEquivariant(_) => "not_equivariant",
            Error::FiltrationViolation(_) => "filtration_violation",
            Error::NoSquareRoot(_) => "no_square_root",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Overflow(_) => "overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
