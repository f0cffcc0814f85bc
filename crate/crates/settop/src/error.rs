//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors raised by the constructions and checks of this crate.
///
/// Malformed inputs (out-of-range points, syntax errors, broken
/// preconditions) are distinguished from internal-consistency faults, which
/// indicate that two independent computations of the same value disagreed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A point index does not belong to the ambient space.
    #[error("point {point} is out of range for a space with {n} points")]
    PointOutOfRange { point: usize, n: usize },

    /// A space is larger than the fixed-width point sets support.
    #[error("spaces are limited to {max} points, got {n}")]
    TooManyPoints { n: usize, max: usize },

    /// A family member or argument was required to be nonempty.
    #[error("empty set where a nonempty one is required: {0}")]
    EmptySet(String),

    /// A family of closed sets violates one of the topology conditions.
    #[error("not a topology: {0}")]
    NotATopology(String),

    /// A desk-scale guard refused a combinatorially explosive request.
    #[error("guard exceeded: {what} is {value}, limit is {limit}")]
    Guard { what: &'static str, value: usize, limit: usize },

    /// An input violates a documented precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A map between spaces is not continuous.
    #[error("map is not continuous: preimage of closed set {0} is not closed")]
    NotContinuous(String),

    /// The direct image of a closed set under a continuous map is not closed.
    #[error("image {0} of a closed set is not closed in the target")]
    ImageNotClosed(String),

    /// Text or JSON input could not be parsed.
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Two independent computations of the same value disagreed.
    #[error("internal consistency fault: {0}")]
    Inconsistent(String),
}

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
