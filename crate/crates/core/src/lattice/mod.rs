//! Lattice-specific predicates and constructions.

mod duality;
pub mod hnf;
mod normal_form;
mod points;

pub use duality::{
    dual_h, dual_polytope, facet_lattice_data, is_fano, is_reflexive, root_symmetry_check,
    FacetLatticeData, FacetLatticeEntry,
};
pub use normal_form::{
    are_equivalent, is_multiple_of_unimodular_simplex, normal_form, NormalForm, NormalFormSource,
    MAX_NORMAL_FORM_DIM,
};
pub use points::{interior_lattice_points, lattice_points, lattice_points_of};
