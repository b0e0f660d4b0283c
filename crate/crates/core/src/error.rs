use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the frame toolkit.
///
/// The variants are deliberately fine grained: `NotDual` and `GateSingular`
/// for instance point at different characterizations failing.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Norm exponent outside `[1, ∞]`.
    InvalidExponent(f64),
    /// A space of dimension zero was requested.
    ZeroDimension,
    /// Shapes or dimensions do not line up.
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    /// Operator norm requested between spaces carrying different exponents.
    MixedExponents,
    NonSquare {
        rows: usize,
        cols: usize,
    },
    /// Pivot fell below `tol · max|entry|` during elimination.
    Singular {
        pivot: f64,
        threshold: f64,
    },
    /// Frame operator is singular; `rank` is its numerical rank.
    NotAFrame {
        rank: usize,
        dim: usize,
    },
    /// `V·U` is singular in a factorization.
    NotInvertible,
    /// Operation needs as many frame elements as the space dimension.
    RequiresSquare {
        dim: usize,
        count: usize,
    },
    /// Two frames live on different spaces.
    SpaceMismatch,
    /// The gate operator of a parameterized dual is singular.
    GateSingular,
    NotDual,
    NotSimilar,
    NotParseval {
        which: usize,
    },
    NotInvertibleWitness,
    NotOrthogonal,
    /// `C·A + D·B` differs from the identity.
    ContractViolated {
        residual: f64,
    },
    InsufficientCoordinates {
        dim: usize,
        count: usize,
    },
    GenerationFailed {
        attempts: usize,
    },
    InvalidArgument(&'static str),
    /// Two algebraically equal routes disagreed numerically.
    CrossCheckFailed {
        check: &'static str,
        residual: f64,
    },
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::ZeroDimension => "ZeroDimension",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::MixedExponents => "MixedExponents",
            Error::NonSquare { .. } => "NonSquare",
            Error::Singular { .. } => "Singular",
            Error::NotAFrame { .. } => "NotAFrame",
            Error::NotInvertible => "NotInvertible",
            Error::RequiresSquare { .. } => "RequiresSquare",
            Error::SpaceMismatch => "SpaceMismatch",
            Error::GateSingular => "GateSingular",
            Error::NotDual => "NotDual",
            Error::NotSimilar => "NotSimilar",
            Error::NotParseval { .. } => "NotParseval",
            Error::NotInvertibleWitness => "NotInvertibleWitness",
            Error::NotOrthogonal => "NotOrthogonal",
            Error::ContractViolated { .. } => "ContractViolated",
            Error::InsufficientCoordinates { .. } => "InsufficientCoordinates",
            Error::GenerationFailed { .. } => "GenerationFailed",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::CrossCheckFailed { .. } => "CrossCheckFailed",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidExponent(p) => write!(f, "norm exponent {p} is not in [1, inf]"),
            Error::ZeroDimension => write!(f, "space dimension must be at least 1"),
            Error::DimensionMismatch {
                context,
                expected,
                found,
            } => write!(f, "{context}: expected dimension {expected}, found {found}"),
            Error::MixedExponents => {
                write!(f, "operator norm between spaces with different exponents")
            }
            Error::NonSquare { rows, cols } => write!(f, "map is not square ({rows}x{cols})"),
            Error::Singular { pivot, threshold } => {
                write!(f, "singular: pivot {pivot:e} below threshold {threshold:e}")
            }
            Error::NotAFrame { rank, dim } => {
                write!(f, "NotAFrame, rank {rank} of {dim}")
            }
            Error::NotInvertible => write!(f, "V·U is not invertible"),
            Error::RequiresSquare { dim, count } => {
                write!(f, "requires count = dim, got count {count} and dim {dim}")
            }
            Error::SpaceMismatch => write!(f, "frames live on different spaces"),
            Error::GateSingular => write!(f, "gate operator is singular"),
            Error::NotDual => write!(f, "candidate is not a dual"),
            Error::NotSimilar => write!(f, "frames are not similar"),
            Error::NotParseval { which } => write!(f, "frame {which} is not Parseval"),
            Error::NotInvertibleWitness => write!(f, "similarity witness is not invertible"),
            Error::NotOrthogonal => write!(f, "frames are not orthogonal"),
            Error::ContractViolated { residual } => {
                write!(f, "C·A + D·B differs from I by {residual:e}")
            }
            Error::InsufficientCoordinates { dim, count } => write!(
                f,
                "need at least {} sequence coordinates for dim {dim}, got {count}",
                2 * dim
            ),
            Error::GenerationFailed { attempts } => {
                write!(f, "generation failed after {attempts} attempts")
            }
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::CrossCheckFailed { check, residual } => {
                write!(f, "cross-check '{check}' failed with residual {residual:e}")
            }
        }
    }
}

impl core::error::Error for Error {}
