//! Exact rational toolkit for lattice polytopes.
//!
//! Everything is computed over arbitrary-precision rationals: convex hulls and
//! facet enumeration, triangulation-based volumes and barycenters, polar duals,
//! lattice-point enumeration, unimodular normal forms, and a family of
//! verdict-producing checks for Ehrhart-type volume bounds (classical and
//! `R`-weighted), Grünbaum's inequality, the Milman–Pajor bound, and the toric
//! Fano degree dictionary.
//!
//! No floating point is used anywhere; every equality reported by a check is an
//! exact rational equality.

pub mod checks;
pub mod corpus;
pub mod error;
pub mod kernel;
pub mod lattice;
pub mod toric;

pub use error::{Error, Result};
pub use kernel::{
    HPolytope, HalfSpace, LatticePoint, Point, Rational, RationalAffineMap, Section, Triangulation,
    UnimodularAffineMap, VPolytope,
};
