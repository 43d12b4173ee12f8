//! Exact invariants of cluster-tilted algebras of Dynkin type.
//!
//! The pipeline: a quiver ([`Quiver`]) is classified up to mutation
//! equivalence ([`dynkin`], [`recognition`]), turned into a bound quiver
//! algebra whose relations come from the potential or from the explicit
//! presentation of its family ([`algebra`]), and its Cartan matrix is
//! reduced to the singularity-category invariant — a multiset of cyclic
//! Nakayama components — two independent ways ([`classifier`]).
//! All arithmetic is exact (`num::BigInt` / `BigRational`).

pub mod algebra;
pub mod classifier;
pub mod dynkin;
pub mod error;
pub mod io;
pub mod linalg;
pub mod quiver;
pub mod recognition;

pub use error::{Error, Result};
pub use quiver::{CanonicalQuiver, MutationClass, Quiver};
