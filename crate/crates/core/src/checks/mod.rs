//! Volume-bound checks producing exact verdicts.

mod bounds;
mod equality;
mod grunbaum;
mod proof;
mod r_invariant;
mod report;

pub use bounds::{ehrhart_check, milman_pajor_check, minkowski_combined_check};
pub use equality::certify_equality;
pub use grunbaum::{
    grunbaum_check, grunbaum_facet_cuts, grunbaum_fraction, pyramid_equality_check,
};
pub use proof::{construct_phi, proof_trace, PhiConstruction, ProofTrace, Relation, TraceStep};
pub use r_invariant::{r_invariant, shrink_map, shrink_to_barycenter, RInvariantResult};
pub use report::{CheckReport, Status, Value, Witness};
