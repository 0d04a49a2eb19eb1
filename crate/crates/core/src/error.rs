use serde::Serialize;
use thiserror::Error;

use crate::arc::{Arc, GradedModuleDesc};

/// Every failure the library can report.
///
/// Serializes as `{"code": <variant>, "context": <payload>}` so front ends can
/// forward errors as structured data.
#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "code", content = "context")]
pub enum Error {
    #[error("({a}, {b}) is not an arc: need a < b with a finite")]
    InvalidArc { a: String, b: String },

    #[error("no nonsplit extension with end terms {m} and {n}")]
    NoExtension { m: Arc, n: Arc },

    #[error("{0} has no Auslander-Reiten translate")]
    NoTranslate(Arc),

    #[error("{0} is not an ideal module")]
    NotIdeal(GradedModuleDesc),

    #[error("invalid module descriptor {0}")]
    InvalidModule(GradedModuleDesc),

    #[error("window bounds lo={lo}, hi={hi}, fountain={fountain:?} are inconsistent")]
    BadWindow { lo: i64, hi: i64, fountain: Option<i64> },

    #[error("arc {arc} has an endpoint outside the window {lo}..{hi}")]
    OutOfWindow { arc: Arc, lo: i64, hi: i64 },

    #[error("infinite arc {0} cannot be stored in a window; use the fountain marker")]
    InfiniteArcInWindow(Arc),

    #[error("arcs {0} and {1} cross")]
    CrossingPair(Arc, Arc),

    #[error("boundary arc ({0}, {0}+1) is missing")]
    MissingBoundary(i64),

    #[error("window is not closed: closing arc {0} is missing")]
    NotClosed(Arc),

    #[error("region with vertices {0:?} is not triangulated")]
    WrongCount(Vec<i64>),

    #[error("the star of vertex {0} is not complete inside the window")]
    IncompleteAtVertex(i64),

    #[error("arc {0} cannot be mutated inside this window")]
    NotMutableHere(Arc),

    #[error("window has no designated fountain point")]
    NoFountain,

    #[error("word contains consecutive ones at position {0}")]
    ConsecutiveOnes(i64),

    #[error("letter {0:?} is not 0 or 1")]
    InvalidLetter(char),

    #[error("gap sequence is not strictly increasing and positive")]
    NotStrictlyIncreasing,

    #[error("frieze entry m[{0},{1}] is not an integer")]
    NonIntegralEntry(i64, i64),

    #[error("frieze entry m[{0},{1}] is not positive")]
    NonPositiveEntry(i64, i64),

    #[error("quiddity sequence does not close up to a finite frieze")]
    DoesNotClose,

    #[error("entry ({0}, {1}) is not defined in this frieze")]
    UndefinedEntry(i64, i64),

    #[error("arc {0} crosses the fountain")]
    FountainCrossing(Arc),

    #[error("frieze entry m[{0},{1}] disagrees with the triangulation")]
    Mismatch(i64, i64),

    #[error("division is not exact")]
    NonExactDivision,

    #[error("division by zero")]
    DivisionByZero,

    #[error("crossings of {0} are not all inside the window")]
    IncompleteCrossings(Arc),
}

impl Error {
    /// The variant name, used as a stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidArc { .. } => "InvalidArc",
            Error::NoExtension { .. } => "NoExtension",
            Error::NoTranslate(_) => "NoTranslate",
            Error::NotIdeal(_) => "NotIdeal",
            Error::InvalidModule(_) => "InvalidModule",
            Error::BadWindow { .. } => "BadWindow",
            Error::OutOfWindow { .. } => "OutOfWindow",
            Error::InfiniteArcInWindow(_) => "InfiniteArcInWindow",
            Error::CrossingPair(..) => "CrossingPair",
            Error::MissingBoundary(_) => "MissingBoundary",
            Error::NotClosed(_) => "NotClosed",
            Error::WrongCount(_) => "WrongCount",
            Error::IncompleteAtVertex(_) => "IncompleteAtVertex",
            Error::NotMutableHere(_) => "NotMutableHere",
            Error::NoFountain => "NoFountain",
            Error::ConsecutiveOnes(_) => "ConsecutiveOnes",
            Error::InvalidLetter(_) => "InvalidLetter",
            Error::NotStrictlyIncreasing => "NotStrictlyIncreasing",
            Error::NonIntegralEntry(..) => "NonIntegralEntry",
            Error::NonPositiveEntry(..) => "NonPositiveEntry",
            Error::DoesNotClose => "DoesNotClose",
            Error::UndefinedEntry(..) => "UndefinedEntry",
            Error::FountainCrossing(_) => "FountainCrossing",
            Error::Mismatch(..) => "Mismatch",
            Error::NonExactDivision => "NonExactDivision",
            Error::DivisionByZero => "DivisionByZero",
            Error::IncompleteCrossings(_) => "IncompleteCrossings",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
