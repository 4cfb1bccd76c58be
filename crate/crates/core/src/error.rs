use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("inequality system is unbounded")]
    Unbounded,
    #[error("inequality system is infeasible")]
    Empty,
    #[error("affine map is singular")]
    SingularMap,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("origin is not an interior point")]
    OriginNotInterior,
    #[error("not a lattice polytope")]
    NotLatticePolytope,
    #[error("not a Fano polytope")]
    NotFano,
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionUnsupported { dim: usize, max: usize },
    #[error("no spanning selection of facets through the vertex")]
    NoSpanningSelection,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("equality certification contradiction: {0}")]
    CertificationContradiction(String),
    /// An internal consistency check failed; indicates a kernel bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
