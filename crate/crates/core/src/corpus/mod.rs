//! Polytope files, generated corpora, report serialization and corpus scans.

mod enumerate;
mod format;
mod random;
mod report;
mod scan;

pub use enumerate::{enumerate_fano_2d, reflexive_polygons};
pub use format::{emit_polytopes, parse_polytopes, PolytopeRecord};
pub use random::{random_polytope, seed_from_env, RandomPolytopes, SEED_VAR};
pub use report::{emit_report, emit_reports, report_json};
pub use scan::{scan, CheckKind, ScanError, ScanSummary};
