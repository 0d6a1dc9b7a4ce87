//! Error type shared across the crate.

use std::fmt;

/// Everything that can go wrong, grouped so callers can map errors onto
/// coarse classes (bad input, capacity guard, internal contract, fixed
/// points) without matching every variant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground set size outside 1..=64.
    InvalidGroundSize { n: u64 },
    /// An element label outside 1..=n.
    LabelOutOfRange { label: u64, n: u32 },
    /// The image sequence is not a bijection of 1..=n.
    NotABijection { detail: String },
    /// A fixed point of the permutation is missing its color suffix.
    MissingColor { position: u32 },
    /// A color suffix was attached to a non-fixed point.
    UnexpectedColor { position: u32 },
    /// Two subsets that must share a cardinality do not.
    CardinalityMismatch { expected: u32, found: u32 },
    /// The necklace step condition fails between I_index and its successor.
    NecklaceCondition { index: u32, detail: String },
    /// An operation defined only for proper nonempty subsets received the
    /// empty set or the full ground set.
    ProperSubsetRequired,
    /// A list of parts is not a valid (non-crossing) partition.
    InvalidPartition { detail: String },
    /// Token-level parse failure.
    Parse { detail: String },
    /// A guarded enumeration would exceed its size limit.
    Capacity {
        what: &'static str,
        limit: u64,
        requested: u64,
    },
    /// An internal precondition was violated. Always a bug in the caller.
    Contract { detail: String },
    /// The permutation has fixed points; the structural algorithms require
    /// a loopless, coloopless positroid.
    FixedPointsPresent { fixed_points: Vec<u32> },
}

/// Coarse classification, matching the CLI exit-status contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorClass {
    Input,
    Capacity,
    Contract,
    FixedPoints,
}

impl Error {
    pub fn class(&self) -> ErrorClass {
        match self {
            Error::Capacity { .. } => ErrorClass::Capacity,
            Error::Contract { .. } => ErrorClass::Contract,
            Error::FixedPointsPresent { .. } => ErrorClass::FixedPoints,
            _ => ErrorClass::Input,
        }
    }

    pub(crate) fn contract(detail: impl Into<String>) -> Error {
        Error::Contract {
            detail: detail.into(),
        }
    }

    pub(crate) fn parse(detail: impl Into<String>) -> Error {
        Error::Parse {
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGroundSize { n } => {
                write!(f, "ground set size {} not in 1..=64", n)
            }
            Error::LabelOutOfRange { label, n } => {
                write!(f, "element label {} outside 1..={}", label, n)
            }
            Error::NotABijection { detail } => write!(f, "not a bijection: {}", detail),
            Error::MissingColor { position } => write!(
                f,
                "position {} is a fixed point and needs a color suffix (w or b)",
                position
            ),
            Error::UnexpectedColor { position } => write!(
                f,
                "position {} is not a fixed point but carries a color suffix",
                position
            ),
            Error::CardinalityMismatch { expected, found } => {
                write!(f, "expected a {}-subset, found {} elements", expected, found)
            }
            Error::NecklaceCondition { index, detail } => {
                write!(f, "necklace condition fails at index {}: {}", index, detail)
            }
            Error::ProperSubsetRequired => {
                write!(f, "operation requires a proper nonempty subset")
            }
            Error::InvalidPartition { detail } => write!(f, "invalid partition: {}", detail),
            Error::Parse { detail } => write!(f, "parse error: {}", detail),
            Error::Capacity {
                what,
                limit,
                requested,
            } => write!(
                f,
                "capacity guard: {} needs {} but the limit is {}",
                what, requested, limit
            ),
            Error::Contract { detail } => write!(f, "contract violation (bug): {}", detail),
            Error::FixedPointsPresent { fixed_points } => write!(
                f,
                "permutation has fixed points {:?}: remove loops and coloops first; \
                 the structural algorithms assume a loopless, coloopless positroid",
                fixed_points
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
