//! Triangulations of the completed ∞-gon and the combinatorics attached to
//! them: arcs and their graded modules, fountain windows, x/y index words,
//! integral and Laurent friezes, and cluster variables.
//!
//! Everything works on finite windows of the ∞-gon; arithmetic is exact.

pub mod arc;
pub mod cluster;
pub mod error;
pub mod frieze;
pub mod laurent;
pub mod sequences;
pub mod triangulation;

pub use arc::{Arc, ArcKind, GradedModuleDesc, MarkedPoint};
pub use cluster::{ClusterSeed, CrossingString};
pub use error::{Error, Result};
pub use frieze::{FriezeArray, FriezeKind, IntFrieze};
pub use laurent::{LaurentPoly, Monomial};
pub use sequences::{BinarySeq, GapSeq, MutationEffect};
pub use triangulation::TriangulationWindow;
