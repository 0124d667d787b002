//! Error type shared by the whole crate.

use std::fmt;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A truth table did not have exactly 2^n entries.
    TruthTableLength {
        arity: usize,
        expected: usize,
        got: usize,
    },
    /// A truth-table entry was neither 0 nor 1.
    NonBinarySymbol { position: usize, found: u8 },
    /// Arity outside the supported range.
    InvalidArity {
        arity: usize,
        min: usize,
        max: usize,
    },
    /// Two values that must share an arity did not.
    ArityMismatch { left: usize, right: usize },
    /// An even arity was required.
    OddArity { arity: usize },
    /// A point index was outside 0..2^n.
    PointOutOfRange { point: usize, arity: usize },
    /// An operation refused to run past its configured resource guard.
    ResourceGuard {
        operation: &'static str,
        limit: usize,
        requested: usize,
    },
    /// An n-ary set operation was given no operands.
    EmptyCollection { operation: &'static str },
    /// A zero vector where a nonzero selector was required.
    ZeroCombination,
    /// Strongly-regular-graph parameters with no consistent realization.
    InfeasibleSrg { reason: String },
    /// A mapping that must be a bijection was not.
    NotABijection { size: usize },
    /// Sizes of two structures that must agree did not.
    SizeMismatch { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TruthTableLength { arity, expected, got } => write!(
                f,
                "truth table for arity {arity} must have exactly {expected} entries, got {got}"
            ),
            Error::NonBinarySymbol { position, found } => write!(
                f,
                "truth-table entry at position {position} must be 0 or 1, got {found}"
            ),
            Error::InvalidArity { arity, min, max } => {
                write!(f, "arity {arity} outside supported range {min}..={max}")
            }
            Error::ArityMismatch { left, right } => {
                write!(f, "arity mismatch: {left} vs {right}")
            }
            Error::OddArity { arity } => write!(f, "arity must be even, got {arity}"),
            Error::PointOutOfRange { point, arity } => {
                write!(f, "point {point} does not fit in {arity} bits")
            }
            Error::ResourceGuard { operation, limit, requested } => write!(
                f,
                "{operation} refused: requested size {requested} exceeds the configured limit {limit}"
            ),
            Error::EmptyCollection { operation } => {
                write!(f, "{operation} requires at least one operand")
            }
            Error::ZeroCombination => {
                write!(f, "component combination selector must be nonzero")
            }
            Error::InfeasibleSrg { reason } => write!(f, "infeasible srg parameters: {reason}"),
            Error::NotABijection { size } => {
                write!(f, "mapping on {size} elements is not a bijection")
            }
            Error::SizeMismatch { expected, got } => {
                write!(f, "size mismatch: expected {expected}, got {got}")
            }
        }
    }
}

impl std::error::Error for Error {}

/// Configurable size limits for the operations that enumerate or
/// materialize exponentially large objects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Largest arity for transform-based analysis (spectra of 2^n values).
    pub max_transform_arity: usize,
    /// Largest arity for brute-force enumeration of all 2^(n+1) affine functions.
    pub max_brute_force_arity: usize,
    /// Cap on m(n+1), the log2 of the affine-map candidate count for the
    /// vectorial distance search. The default keeps the search below 2^20 maps.
    pub max_affine_map_bits: usize,
    /// Largest arity for dense-matrix rank elimination (2^n x 2^n entries).
    pub max_elimination_arity: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_transform_arity: 20,
            max_brute_force_arity: 14,
            max_affine_map_bits: 19,
            max_elimination_arity: 6,
        }
    }
}
