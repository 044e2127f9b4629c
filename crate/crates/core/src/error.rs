//! Error type shared by the whole library.

use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A list of parts that is not a partition.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// Text that does not parse as a partition, r-partition, polynomial or assignment.
    #[error("parse error: {0}")]
    Parse(String),
    /// Operands of different size or component count.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    /// Padding length smaller than some component length.
    #[error("padding m = {given} is smaller than the needed {needed}")]
    PaddingTooSmall { needed: usize, given: usize },
    /// An operation that needs a nonzero entry received the empty r-partition.
    #[error("operation undefined on the empty r-partition")]
    EmptyRPartition,
    /// A polynomial division that was required to be exact left a remainder.
    #[error("inexact division: {0}")]
    InexactDivision(String),
    /// Division by a zero fraction.
    #[error("division by zero")]
    DivisionByZero,
    /// An x-polynomial that should be symmetric within its groups is not.
    #[error("not symmetric: {0}")]
    NotSymmetric(String),
    /// An x-polynomial that should be homogeneous is not.
    #[error("not homogeneous of degree {0}")]
    NotHomogeneous(usize),
    /// A structural property promised by the theory failed.
    #[error("invariant breach: {0}")]
    Invariant(String),
    /// Parameters outside the supported range.
    #[error("out of bounds: {0}")]
    Bounds(String),
}

/// Library result alias.
pub type Result<T> = std::result::Result<T, Error>;
