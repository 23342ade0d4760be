//! Graph products of cyclic groups and of graded algebras over prime fields.
//!
//! The crate computes, by several independent routes, the graded dimensions
//! attached to a simplicial complex `K`: brute-force ranks of graph-product
//! algebras, a clique formula for their Hilbert series, PBW extraction of
//! (restricted) Lie algebra dimensions, and the augmentation filtration of
//! group algebras of graph products of cyclic groups. It also enumerates the
//! iterated commutators generating the commutator subgroup of a right-angled
//! Coxeter group.

pub mod commutators;
pub mod complexes;
pub mod error;
pub mod field;
pub mod groupalg;
pub mod lie;
pub mod linalg;
pub mod ncalg;
pub mod series;
pub mod words;

pub use complexes::{Graph, SimplicialComplex};
pub use error::{Error, Result};
pub use groupalg::{quillen_check, Budgets, GroupAlgebraElement, QuillenReport};
pub use lie::GradedDims;
pub use ncalg::{AlgebraKind, AlgebraPresentation, NCPolynomial};
pub use series::IntegerPowerSeries;
pub use words::{GroupElement, GroupSpec, Order};
