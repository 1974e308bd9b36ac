//! Exact tools for restricted matching extendability E(m,n) and for graphs
//! embedded on closed surfaces.
//!
//! The exact-arithmetic parts (Euler contributions, the surface constant c)
//! are generic over [`scalar::ExactScalar`]; the aliases below fix the common
//! choices.

pub mod embedding;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod scalar;
pub mod surfaces;

pub use embedding::{CombinatorialMap, EmbeddingError, FaceSet, SearchBudget};
pub use graph::{Edge, Family, Graph, GraphError};
pub use matching::{EmnQuery, EmnVerdict, Matching, MatchingError, Witness};
pub use scalar::ExactScalar;
pub use surfaces::{Surface, SurfaceError, SurfaceKind};

/// 64-bit exact rational; overflow is reported, never wrapped.
pub type Rational = num_rational::Rational64;

/// Arbitrary-precision rational.
pub type BigRational = num_rational::BigRational;

/// Euler report over 64-bit rationals.
pub type EulerReport = embedding::EulerReport<Rational>;

/// Euler report over arbitrary-precision rationals.
pub type BigEulerReport = embedding::EulerReport<BigRational>;
