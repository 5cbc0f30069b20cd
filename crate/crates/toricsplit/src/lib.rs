//! Exact computations with toric ideals of integer vector configurations.
//!
//! Everything here runs on arbitrary-precision integers and rationals; there
//! is no floating point anywhere. The main entry points are:
//!
//! * [`Configuration`] — an integer matrix whose columns are the vectors of
//!   the configuration, together with a pointedness certificate.
//! * [`markov::markov_basis`] / [`markov::minimal_system`] — binomial
//!   generating sets of the toric ideal and their minimalization via fiber
//!   graphs.
//! * [`splitting`] — deciding whether the toric ideal splits as a sum of two
//!   proper toric subideals, enumerating the splittings and verifying them.
//! * [`gluing`] — semigroup gluings and complete-intersection predicates.
//! * [`curve`] — numerical semigroup arithmetic and the splitting
//!   construction for 4-generated Gorenstein monomial curves.
//! * [`graph`] — toric ideals of graphs, 4-cycle generators of complete
//!   bipartite graphs and the exhaustive spanning-tree cover checker.

pub mod config;
pub mod curve;
pub mod error;
pub mod gluing;
pub mod graph;
pub mod linalg;
pub mod markov;
pub mod splitting;

pub use config::{Configuration, Fiber, Limits, MoveVector, PointednessCertificate};
pub use error::Error;
pub use linalg::{
    intersect_lattices, kernel_integer, kernel_rational, orthogonal_complement, saturate_span,
    IntMatrix, LatticeZ, Matrix, RatMatrix, SubspaceQ,
};

/// Arbitrary-precision integer scalar used throughout.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational scalar used throughout.
pub type Rat = num_rational::BigRational;
