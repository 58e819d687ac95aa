//! Quiver representations over the field with one element and their Hall
//! algebra.
//!
//! Vector spaces over F1 are pointed finite sets and linear maps are partial
//! injections. On top of that the crate builds quiver representations,
//! their Krull-Schmidt theory and canonical forms, the Hall algebra of the
//! nilpotent category with its cocommutative coproduct, the Kac-Moody side
//! (Cartan matrices, Serre relations, composition algebras, root counts),
//! and closed-form models for the Jordan, type A and cyclic quivers.
//!
//! All arithmetic is exact. The crate is `no_std` with `alloc` when built
//! without the default `std` feature; the only thing `std` adds is a
//! thread-safe memo table.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(feature = "std")]
extern crate std;

pub mod error;
pub mod f1vect;
pub mod families;
pub mod hall;
pub mod kacmoody;
pub mod linalg;
pub mod memo;
pub mod names;
pub mod quiver;
pub mod structure;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use f1vect::{count_subspaces, jordan_decompose, PartialInjection, PointedSpace};
pub use hall::{ExtendedHall, HallAlgebra, HallElement, TensorElement};
pub use kacmoody::{CartanMatrix, CompositionAlgebra, RootSystemData};
pub use quiver::{DimVector, Quiver, Rep, RepMorphism, Subrep};
pub use structure::{
    aut_count, canonical_form, canonical_key, indecomposable_summands, iso, CanonicalKey,
};
