use num_traits::{One, Signed};

use super::points::lattice_points_of;
use crate::checks::{CheckReport, Status, Witness};
use crate::error::{Error, Result};
use crate::kernel::{barycenter, HPolytope, HalfSpace, LatticePoint, Point, Rational, VPolytope};

fn require_origin_interior(q: &VPolytope) -> Result<()> {
    if q.contains(&Point::zeros(q.dim()), true) {
        Ok(())
    } else {
        Err(Error::OriginNotInterior)
    }
}

/// `Q* = {x : <v, x> >= -1 for every vertex v of Q}` as an H-polytope.
pub fn dual_h(q: &VPolytope) -> Result<HPolytope> {
    Ok(dual_polytope(q)?.h().clone())
}

/// Vertex description of the polar dual `Q*`.
pub fn dual_polytope(q: &VPolytope) -> Result<VPolytope> {
    require_origin_interior(q)?;
    let inequalities = q
        .vertices()
        .iter()
        .map(|v| HalfSpace::new(-v, Rational::one()))
        .collect::<Result<Vec<_>>>()?;
    VPolytope::from_inequalities(q.dim(), inequalities)
}

/// Lattice polytope with the origin in its interior and primitive vertices.
pub fn is_fano(q: &VPolytope) -> bool {
    q.vertices()
        .iter()
        .all(|v| v.to_lattice().is_some_and(|l| l.is_primitive()))
        && q.contains(&Point::zeros(q.dim()), true)
}

/// Whether the dual of the lattice polytope `q` is again a lattice polytope.
pub fn is_reflexive(q: &VPolytope) -> Result<bool> {
    if !q.is_lattice() {
        return Err(Error::NotLatticePolytope);
    }
    require_origin_interior(q)?;
    // Lattice distance one for every facet, i.e. all offsets equal 1 with
    // primitive integer normals; this is the same as Q* being integral.
    Ok(q.h().facets().iter().all(|f| f.offset().is_one()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetLatticeEntry {
    /// Primitive outer normal.
    pub normal: LatticePoint,
    /// Lattice distance of the facet hyperplane from the origin.
    pub distance: Rational,
    /// Lattice points in the relative interior of the facet.
    pub interior_points: Vec<LatticePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetLatticeData {
    pub facets: Vec<FacetLatticeEntry>,
}

impl FacetLatticeData {
    /// All facet-relative-interior lattice points (the roots), sorted.
    pub fn roots(&self) -> Vec<LatticePoint> {
        let mut all: Vec<LatticePoint> = self
            .facets
            .iter()
            .flat_map(|f| f.interior_points.iter().cloned())
            .collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn is_root(&self, m: &LatticePoint) -> bool {
        self.facets.iter().any(|f| f.interior_points.contains(m))
    }
}

pub fn facet_lattice_data(p: &VPolytope) -> Result<FacetLatticeData> {
    require_origin_interior(p)?;
    let facets = p.h().facets();
    let boundary: Vec<(LatticePoint, Vec<Rational>)> = lattice_points_of(p, false)
        .into_iter()
        .map(|x| {
            let pt = x.to_point();
            let slacks = facets.iter().map(|f| f.slack(&pt)).collect();
            (x, slacks)
        })
        .collect();
    let facets = facets
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let interior_points = boundary
                .iter()
                .filter(|(_, s)| {
                    s.iter().enumerate().all(|(j, v)| {
                        if j == i {
                            v == &Rational::from_integer(0.into())
                        } else {
                            v.is_positive()
                        }
                    })
                })
                .map(|(x, _)| x.clone())
                .collect();
            FacetLatticeEntry {
                normal: f
                    .normal()
                    .to_lattice()
                    .expect("facet normals are primitive integer vectors"),
                distance: f.offset().clone(),
                interior_points,
            }
        })
        .collect();
    Ok(FacetLatticeData { facets })
}

/// For a reflexive polytope with barycenter at the origin, verifies that the
/// facet-relative-interior lattice points form a centrally symmetric set.
pub fn root_symmetry_check(s: &VPolytope) -> CheckReport {
    const NAME: &str = "root-symmetry";
    match is_reflexive(s) {
        Ok(true) => {}
        Ok(false) => return CheckReport::not_applicable(NAME, "polytope is not reflexive"),
        Err(e) => return CheckReport::not_applicable(NAME, e.to_string()),
    }
    let b = barycenter(s);
    if !b.is_zero() {
        return CheckReport::not_applicable(NAME, "barycenter is not the origin")
            .with_value("barycenter", b);
    }
    let data = facet_lattice_data(s).expect("origin is interior for reflexive polytopes");
    let roots = data.roots();
    let violations: Vec<LatticePoint> = roots
        .iter()
        .filter(|m| !data.is_root(&m.neg()))
        .cloned()
        .collect();
    let status = if violations.is_empty() {
        Status::Equality
    } else {
        Status::Violation
    };
    let mut report = CheckReport::new(NAME, status)
        .with_value("roots", roots.as_slice())
        .with_value("root_count", roots.len());
    if let Some(m) = violations.first() {
        report = report
            .with_value("violations", violations.as_slice())
            .with_reason("a root whose negative is not a root")
            .with_witness(Witness::Point(m.to_point()));
    }
    report
}
