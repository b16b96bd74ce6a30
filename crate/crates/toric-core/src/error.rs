//! Error type shared by all kernel modules.

use alloc::string::String;
use core::fmt;

use crate::lattice::LatticeVector;

/// Errors reported by the cone/semigroup kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two vectors (or a matrix and a vector) of incompatible rank were combined.
    DimensionMismatch { expected: usize, found: usize },
    /// Structurally invalid input: empty generator list, zero vector where a
    /// nonzero one is required, and similar.
    DegenerateInput(&'static str),
    /// The cone contains a line; `lineality` spans part of it.
    NotPointed { lineality: LatticeVector },
    /// The cone does not span its ambient space. Reduce it with
    /// `cone::reduce_to_full_pointed` first.
    NotFull { span_rank: usize, ambient_rank: usize },
    /// The zero face carries no monomial prime generators.
    ZeroFace,
    /// A parameter is outside its documented range (`r = 0`, bad family
    /// parameters, and so on).
    InvalidParameter(&'static str),
    /// A lattice point lies outside the semigroup `C^∨ ∩ M`.
    OutsideSemigroup(LatticeVector),
    /// The requested computation exceeds the supported desk scale.
    Unsupported(String),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "rank mismatch: expected {expected}, found {found}")
            }
            Error::DegenerateInput(msg) => write!(f, "degenerate input: {msg}"),
            Error::NotPointed { lineality } => {
                write!(f, "cone is not pointed: it contains the line through {lineality}")
            }
            Error::NotFull { span_rank, ambient_rank } => write!(
                f,
                "cone spans only rank {span_rank} of the ambient rank {ambient_rank}; \
                 apply reduce_to_full_pointed first"
            ),
            Error::ZeroFace => write!(f, "the zero face has no monomial generators"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::OutsideSemigroup(v) => {
                write!(f, "lattice point {v} lies outside the semigroup")
            }
            Error::Unsupported(msg) => write!(f, "unsupported at desk scale: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
