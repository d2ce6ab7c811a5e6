use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::ParseScalarError;

/// Errors raised by constructors and precondition-checked operations.
///
/// Failed mathematical checks are not errors; they are reported through the
/// boolean/witness results of the checking functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two objects over different algebras (by dimension) were combined.
    DimensionMismatch { expected: usize, found: usize },
    /// Structure constants violate associativity on this basis triple.
    NonAssociative { witness: [usize; 3] },
    /// A claimed unit fails the unit law on this basis index.
    NotAUnit { witness: usize },
    /// Requested cochain arity exceeds the supported range.
    ArityOverflow { arity: usize },
    /// A dense table or linear system would exceed the configured budget.
    TooLarge { what: &'static str, size: u128, limit: u128 },
    /// An operator that must be a Nijenhuis tensor has nonzero torsion here.
    NotNijenhuis { witness: [usize; 2] },
    /// A decomposition part that must be closed under multiplication is not.
    NotSubalgebra { part: u8, witness: [usize; 2] },
    /// An index outside `0..dim`.
    IndexOutOfRange { index: usize, dim: usize },
    /// Any other violated precondition; `witness` is a basis tuple when one exists.
    Precondition { reason: String, witness: Vec<usize> },
    Parse(ParseScalarError),
    /// A malformed input document.
    Invalid(String),
}

impl Error {
    pub fn precondition(reason: impl Into<String>) -> Self {
        Error::Precondition { reason: reason.into(), witness: Vec::new() }
    }

    pub fn precondition_at(reason: impl Into<String>, witness: &[usize]) -> Self {
        Error::Precondition { reason: reason.into(), witness: witness.into() }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonAssociative { witness: [i, j, k] } => {
                write!(f, "structure is not associative on basis triple ({i}, {j}, {k})")
            }
            Error::NotAUnit { witness } => write!(f, "claimed unit fails the unit law on basis element {witness}"),
            Error::ArityOverflow { arity } => write!(f, "cochain arity {arity} is not supported"),
            Error::TooLarge { what, size, limit } => write!(f, "{what} of size {size} exceeds limit {limit}"),
            Error::NotNijenhuis { witness: [i, j] } => {
                write!(f, "operator is not a Nijenhuis tensor: torsion nonzero on ({i}, {j})")
            }
            Error::NotSubalgebra { part, witness: [i, j] } => {
                write!(f, "part {part} is not a subalgebra: product of basis ({i}, {j}) leaves it")
            }
            Error::IndexOutOfRange { index, dim } => write!(f, "index {index} out of range for dimension {dim}"),
            Error::Precondition { reason, witness } if witness.is_empty() => write!(f, "precondition failed: {reason}"),
            Error::Precondition { reason, witness } => write!(f, "precondition failed: {reason} at {witness:?}"),
            Error::Parse(e) => write!(f, "{e}"),
            Error::Invalid(msg) => write!(f, "invalid document: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

impl From<ParseScalarError> for Error {
    fn from(e: ParseScalarError) -> Self {
        Error::Parse(e)
    }
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
