//! The volume chain behind the Ehrhart bound for bodies inside duals of
//! lattice polytopes.
//!
//! For a vertex `v` of `P = Q*`, pick facets `F_1..F_n` through `v` whose
//! dual labels `l_i` (vertices of `Q`) are linearly independent and set
//! `φ(x) = (<l_1, x> + 1, ..., <l_n, x> + 1)`. Then `φ(P)` lies in the
//! nonnegative orthant, `φ(v) = 0`, `φ(0) = 1`, `|det φ| >= 1`, and with
//! `η⁻ = {<1, x> <= n}`:
//!
//! ```text
//! vol K <= |det φ| vol K = vol φK
//! (n/(n+1))^n vol φK <= vol(φK ∩ η⁻) <= vol(φP ∩ η⁻) <= vol(nΔn) = n^n/n!
//! ```

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::grunbaum::grunbaum_fraction;
use super::report::{CheckReport, Status};
use crate::error::{Error, Result};
use crate::kernel::rational::{ehrhart_bound, factorial, pow};
use crate::kernel::{
    affine_image, barycenter, intersect, matrix, volume, HalfSpace, LatticePoint, Point, Rational,
    RationalAffineMap, VPolytope,
};
use crate::lattice::dual_polytope;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhiConstruction {
    pub vertex: Point,
    /// Vertices of `Q` labelling the chosen facets of `P` through `vertex`.
    pub labels: Vec<LatticePoint>,
    pub map: RationalAffineMap,
    pub det: Rational,
}

fn require_lattice_with_interior_origin(q: &VPolytope) -> Result<()> {
    if !q.is_lattice() {
        return Err(Error::NotLatticePolytope);
    }
    if !q.contains(&Point::zeros(q.dim()), true) {
        return Err(Error::OriginNotInterior);
    }
    Ok(())
}

/// Builds `φ` for the vertex `v` of `P = Q*`.
///
/// Facets of `P` are taken in the canonical facet order (lexicographic in the
/// primitive outer normal); the lexicographically first `n`-subset through
/// `v` with independent labels is used.
pub fn construct_phi(p: &VPolytope, q: &VPolytope, v: &Point) -> Result<PhiConstruction> {
    require_lattice_with_interior_origin(q)?;
    if &dual_polytope(q)? != p {
        return Err(Error::Precondition("P is not the dual of Q".into()));
    }
    if !p.vertices().contains(v) {
        return Err(Error::Precondition("v is not a vertex of P".into()));
    }
    let n = p.dim();

    // P = {<l, x> >= -1 : l vertex of Q}; outer normal of the facet of l is -l.
    let mut labels: Vec<&Point> = q.vertices().iter().collect();
    labels.sort_by_key(|l| -*l);
    let minus_one = -Rational::one();
    let through: Vec<&Point> = labels
        .into_iter()
        .filter(|l| l.dot(v) == minus_one)
        .collect();

    let chosen = first_spanning_subset(&through, n).ok_or(Error::NoSpanningSelection)?;
    let rows: matrix::Matrix = chosen.iter().map(|l| l.coords().to_vec()).collect();
    let map =
        RationalAffineMap::new(rows, Point::ones(n)).map_err(|_| Error::NoSpanningSelection)?;
    let det = map.det();

    if !map.apply(v).is_zero() {
        return Err(Error::Invariant("φ(v) is not the origin".into()));
    }
    let in_orthant = p
        .vertices()
        .iter()
        .all(|w| map.apply(w).coords().iter().all(|c| !c.is_negative()));
    if !in_orthant {
        return Err(Error::Invariant(
            "φ(P) leaves the nonnegative orthant".into(),
        ));
    }
    if det.abs() < Rational::one() {
        return Err(Error::Invariant("|det φ| < 1 for lattice labels".into()));
    }
    Ok(PhiConstruction {
        vertex: v.clone(),
        labels: chosen
            .iter()
            .map(|l| l.to_lattice().expect("Q is a lattice polytope"))
            .collect(),
        map,
        det,
    })
}

/// Lexicographically first `k`-subset (by position) of linearly independent vectors.
fn first_spanning_subset<'a>(candidates: &[&'a Point], k: usize) -> Option<Vec<&'a Point>> {
    fn go<'a>(
        candidates: &[&'a Point],
        start: usize,
        k: usize,
        chosen: &mut Vec<&'a Point>,
    ) -> bool {
        if chosen.len() == k {
            let rows: matrix::Matrix = chosen.iter().map(|p| p.coords().to_vec()).collect();
            return matrix::rank(&rows) == k;
        }
        for i in start..candidates.len() {
            chosen.push(candidates[i]);
            let rows: matrix::Matrix = chosen.iter().map(|p| p.coords().to_vec()).collect();
            if matrix::rank(&rows) == chosen.len() && go(candidates, i + 1, k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(k);
    go(candidates, 0, k, &mut chosen).then_some(chosen)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `lhs <= rhs`
    AtMost,
    /// `lhs = rhs` (an identity; anything else is a violation)
    Equal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub label: &'static str,
    pub lhs: Rational,
    pub relation: Relation,
    pub rhs: Rational,
    pub status: Status,
}

impl TraceStep {
    fn new(label: &'static str, lhs: Rational, relation: Relation, rhs: Rational) -> Self {
        let status = match relation {
            Relation::AtMost => Status::of_le(&lhs, &rhs),
            Relation::Equal if lhs == rhs => Status::Equality,
            Relation::Equal => Status::Violation,
        };
        TraceStep {
            label,
            lhs,
            relation,
            rhs,
            status,
        }
    }
}

/// One run of the chain for a fixed vertex of `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofTrace {
    pub phi: PhiConstruction,
    pub volume: Rational,
    pub abs_det: Rational,
    pub image_volume: Rational,
    pub grunbaum_term: Rational,
    pub image_cut_volume: Rational,
    pub dual_cut_volume: Rational,
    pub simplex_volume: Rational,
    pub bound: Rational,
    pub steps: Vec<TraceStep>,
    /// Worst step status.
    pub status: Status,
}

impl ProofTrace {
    /// The chain values in order: `vol K`, `|det φ|`, `vol φK`,
    /// `(n/(n+1))^n vol φK`, `vol(φK ∩ η⁻)`, `vol(φP ∩ η⁻)`, `vol(nΔn)`,
    /// `(n+1)^n/n!`.
    pub fn chain(&self) -> [Rational; 8] {
        [
            self.volume.clone(),
            self.abs_det.clone(),
            self.image_volume.clone(),
            self.grunbaum_term.clone(),
            self.image_cut_volume.clone(),
            self.dual_cut_volume.clone(),
            self.simplex_volume.clone(),
            self.bound.clone(),
        ]
    }

    pub fn all_equalities(&self) -> bool {
        self.steps.iter().all(|s| s.status == Status::Equality)
    }

    pub fn any_strict(&self) -> bool {
        self.steps.iter().any(|s| s.status == Status::Strict)
    }

    pub fn to_check_report(&self) -> CheckReport {
        let mut report = CheckReport::new("proof-trace", self.status)
            .with_input("vertex", &self.phi.vertex)
            .with_value("labels", self.phi.labels.as_slice())
            .with_value("det", &self.phi.det);
        for step in &self.steps {
            let op = match step.relation {
                Relation::AtMost => "<=",
                Relation::Equal => "=",
            };
            report = report.with_value(
                step.label,
                format!("{} {op} {} ({})", step.lhs, step.rhs, step.status),
            );
        }
        report.with_bound(self.bound.clone())
    }
}

/// Evaluates the full exact chain for every vertex of `P = Q*`.
pub fn proof_trace(k: &VPolytope, q: &VPolytope) -> Result<Vec<ProofTrace>> {
    require_lattice_with_interior_origin(q)?;
    let n = k.dim();
    if q.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: q.dim(),
        });
    }
    if !barycenter(k).is_zero() {
        return Err(Error::Precondition(
            "barycenter of K is not the origin".into(),
        ));
    }
    let p = dual_polytope(q)?;
    if !k.vertices().iter().all(|v| p.contains(v, false)) {
        return Err(Error::Precondition(
            "K is not contained in the dual of Q".into(),
        ));
    }

    let nn = Rational::from_integer(BigInt::from(n));
    let eta = HalfSpace::new(Point::ones(n), nn.clone())?;
    let mut orthant: Vec<HalfSpace> = (0..n)
        .map(|i| HalfSpace::at_least(Point::unit(n, i), Rational::from(BigInt::from(0))))
        .collect::<Result<_>>()?;
    orthant.push(eta.clone());
    let simplex_volume = volume(&VPolytope::from_inequalities(n, orthant)?);
    let simplex_formula = Rational::new(BigInt::from(n).pow(n as u32), factorial(n));
    let bound = ehrhart_bound(n);
    // The conclusion follows from the chain: ((n+1)/n)^n * n^n/n! = (n+1)^n/n!.
    let implied = pow(&((&nn + Rational::one()) / &nn), n) * &simplex_formula;
    if implied != bound {
        return Err(Error::Invariant("bound is not implied by the chain".into()));
    }

    let vol = volume(k);
    p.vertices()
        .iter()
        .map(|v| {
            let phi = construct_phi(&p, q, v)?;
            let abs_det = phi.det.abs();
            let image = affine_image(k, &phi.map)?;
            let image_volume = volume(&image);
            let grunbaum_term = grunbaum_fraction(n) * &image_volume;
            let image_cut_volume = intersect(image.h(), &eta)?.volume();
            let dual_image = affine_image(&p, &phi.map)?;
            let dual_cut_volume = intersect(dual_image.h(), &eta)?.volume();

            let steps = vec![
                TraceStep::new("det", vol.clone(), Relation::AtMost, &abs_det * &vol),
                TraceStep::new(
                    "image-volume",
                    &abs_det * &vol,
                    Relation::Equal,
                    image_volume.clone(),
                ),
                TraceStep::new(
                    "grunbaum",
                    grunbaum_term.clone(),
                    Relation::AtMost,
                    image_cut_volume.clone(),
                ),
                TraceStep::new(
                    "containment",
                    image_cut_volume.clone(),
                    Relation::AtMost,
                    dual_cut_volume.clone(),
                ),
                TraceStep::new(
                    "orthant",
                    dual_cut_volume.clone(),
                    Relation::AtMost,
                    simplex_volume.clone(),
                ),
                TraceStep::new(
                    "simplex-volume",
                    simplex_volume.clone(),
                    Relation::Equal,
                    simplex_formula.clone(),
                ),
                TraceStep::new(
                    "image-bound",
                    image_volume.clone(),
                    Relation::AtMost,
                    bound.clone(),
                ),
                TraceStep::new("conclusion", vol.clone(), Relation::AtMost, bound.clone()),
            ];
            let status = steps
                .iter()
                .fold(Status::NotApplicable, |acc, s| acc.worst(s.status));
            Ok(ProofTrace {
                phi,
                volume: vol.clone(),
                abs_det,
                image_volume,
                grunbaum_term,
                image_cut_volume,
                dual_cut_volume,
                simplex_volume: simplex_volume.clone(),
                bound: bound.clone(),
                steps,
                status,
            })
        })
        .collect()
}
