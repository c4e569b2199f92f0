//! Exact structural computations for nilradicals of parabolic subalgebras
//! of real simple Lie algebras: restricted root systems, Kostant cascades,
//! layer decompositions, Pfaffian Plancherel densities, general-parabolic
//! layer data and dual-lattice multiplicity tables.
//!
//! Everything here is exact rational arithmetic; the crate is `no_std`
//! (with `alloc`) so the algebraic kernel stays free of platform
//! dependencies. IO, numerics and the command line live in the companion
//! `cascadekit` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod catalog;
pub mod linalg;
pub mod model;
pub mod chevalley;
pub mod rat;
pub mod roots;

pub use rat::Rat;
pub use roots::{build_root_system, inner, Family, RestrictedRootDatum, Root, RootError, TypeLabel};
