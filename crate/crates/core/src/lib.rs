//! Finite semigroups as Cayley tables, their rational semigroup algebras, and
//! the semilattice-indecomposability and subsemilattice results built on them.
//!
//! The modules mirror the layers of the library:
//!
//! * [`semigroup`], [`congruence`], [`iso`], [`sg`]: tables, ideals,
//!   quotients, products, isomorphism, congruences and the `.sg` file format.
//! * [`linalg`], [`algebra`]: exact rational linear algebra, the Jacobson
//!   radical and Wedderburn block statistics.
//! * [`indecomposability`]: three independent tests for
//!   semilattice-indecomposability.
//! * [`constructions`]: Brandt and Rees matrix semigroups, `A ×₀ B`, zero
//!   adjunctions, embeddings, named semilattices and Munn semigroups.
//! * [`lattice`]: maximum subsemilattices, the cardinality bound, principal
//!   factors and B₂-combinatorial semigroups.
//! * [`enumeration`]: exhaustive generation of small semigroups up to
//!   isomorphism and the order-9 B₂-combinatorial classification.

pub mod algebra;
pub mod congruence;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod indecomposability;
pub mod iso;
pub mod lattice;
pub mod linalg;
pub mod semigroup;
pub mod sg;

pub use algebra::{AlgebraSummary, RationalAlgebra};
pub use congruence::Congruence;
pub use enumeration::CanonicalTable;
pub use error::{Error, Result};
pub use iso::{are_isomorphic, find_isomorphism, IsoOutcome};
pub use semigroup::{Morphism, Semigroup, Subset};
