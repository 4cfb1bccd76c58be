//! Exact rational linear algebra and polytope primitives.

mod affine;
mod dd;
pub mod matrix;
mod point;
mod polytope;
pub mod rational;
mod triangulate;

pub use affine::{affine_image, RationalAffineMap, UnimodularAffineMap};
pub use point::{LatticePoint, Point};
pub use polytope::{
    contains, h_to_v, hull, intersect, intersect_polytopes, v_to_h, HPolytope, HalfSpace, Section,
    VPolytope,
};
pub use rational::Rational;
pub use triangulate::{barycenter, triangulate, volume, Triangulation};
