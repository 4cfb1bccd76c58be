use num_bigint::BigInt;
use num_traits::Signed;

use super::report::{CheckReport, Status, Witness};
use crate::kernel::{barycenter, intersect, volume, HalfSpace, Point, Rational, VPolytope};

/// `(n / (n+1))^n`, the guaranteed fraction of volume on either side of a
/// hyperplane through the barycenter.
pub fn grunbaum_fraction(n: usize) -> Rational {
    Rational::new(
        BigInt::from(n).pow(n as u32),
        BigInt::from(n + 1).pow(n as u32),
    )
}

/// Index of a vertex `a` with `a` strictly inside `H` and every other vertex on
/// one hyperplane parallel to the boundary of `H`, i.e. `K` is a pyramid with
/// apex on the `H` side and base parallel to `h`.
fn pyramid_apex(k: &VPolytope, h: &HalfSpace) -> Option<usize> {
    let heights: Vec<Rational> = k.vertices().iter().map(|v| h.normal().dot(v)).collect();
    (0..heights.len()).find(|&a| {
        let mut rest = (0..heights.len()).filter(|&i| i != a).map(|i| &heights[i]);
        let Some(first) = rest.next() else {
            return false;
        };
        rest.all(|x| x == first) && heights[a] < *h.offset() && *first > *h.offset()
    })
}

struct Cut {
    n: usize,
    barycenter: Point,
    volume: Rational,
    captured: Rational,
    bound: Rational,
}

fn cut(k: &VPolytope, h: &HalfSpace) -> Cut {
    cut_with(k, h, volume(k), barycenter(k))
}

fn cut_with(k: &VPolytope, h: &HalfSpace, vol: Rational, barycenter: Point) -> Cut {
    let n = k.dim();
    let captured = intersect(k.h(), h).expect("same dimension").volume();
    Cut {
        n,
        barycenter,
        bound: grunbaum_fraction(n) * &vol,
        volume: vol,
        captured,
    }
}

/// `vol(K ∩ H) >= (n/(n+1))^n vol(K)` for a closed half-space `H` containing
/// the barycenter. When the boundary passes through the barycenter, equality
/// must coincide with `K` being a pyramid over a base parallel to it.
pub fn grunbaum_check(k: &VPolytope, h: &HalfSpace) -> CheckReport {
    if h.dim() != k.dim() {
        return CheckReport::not_applicable(
            "grunbaum",
            "half-space dimension differs from the body",
        );
    }
    grunbaum_report(k, h, cut(k, h))
}

fn grunbaum_report(k: &VPolytope, h: &HalfSpace, c: Cut) -> CheckReport {
    const NAME: &str = "grunbaum";
    if !h.contains(&c.barycenter) {
        return CheckReport::not_applicable(NAME, "half-space does not contain the barycenter")
            .with_input("halfspace", h.to_string())
            .with_value("barycenter", c.barycenter);
    }
    let mut status = Status::of_ge(&c.captured, &c.bound);
    let through_barycenter = h.on_boundary(&c.barycenter);
    let mut report = CheckReport::new(NAME, status)
        .with_input("dim", c.n)
        .with_input("halfspace", h.to_string())
        .with_value("volume", &c.volume)
        .with_value("captured_volume", &c.captured)
        .with_value("fraction", grunbaum_fraction(c.n))
        .with_value("through_barycenter", through_barycenter)
        .with_bound(c.bound.clone());

    if through_barycenter {
        let pyramid = pyramid_report(k, h, &c);
        let is_pyramid = pyramid.status == Status::Equality;
        report = report.with_value("pyramid", is_pyramid);
        if (status == Status::Equality) != is_pyramid && status != Status::Violation {
            status = Status::Violation;
            report =
                report.with_reason("equality case disagrees with the pyramid characterization");
        }
        if status == Status::Equality {
            report = report.with_witness(Witness::Report(Box::new(pyramid)));
        }
    } else if status == Status::Equality {
        status = Status::Violation;
        report = report.with_reason("equality with the barycenter strictly inside the half-space");
    }
    report.status = status;
    report
}

fn pyramid_report(k: &VPolytope, h: &HalfSpace, c: &Cut) -> CheckReport {
    const NAME: &str = "pyramid-equality";
    let apex = pyramid_apex(k, h);
    let grunbaum_equal = c.captured == c.bound;
    let mut status = if apex.is_some() {
        Status::Equality
    } else {
        Status::Strict
    };
    let mut report = CheckReport::new(NAME, status)
        .with_input("halfspace", h.to_string())
        .with_value("pyramid", apex.is_some())
        .with_value("grunbaum_equality", grunbaum_equal);
    if let Some(a) = apex {
        let base: Vec<Point> = (0..k.num_vertices())
            .filter(|&i| i != a)
            .map(|i| k.vertices()[i].clone())
            .collect();
        report = report
            .with_value("apex", &k.vertices()[a])
            .with_value("base", base)
            .with_witness(Witness::Point(k.vertices()[a].clone()));
    }
    if apex.is_some() != grunbaum_equal {
        status = Status::Violation;
        report = report.with_reason("pyramid verdict disagrees with Grünbaum equality");
    }
    report.status = status;
    report
}

/// Decides whether `K` is a pyramid whose base spans a hyperplane parallel to
/// the boundary `h` of `H` (apex on the `H` side), for `h` through the
/// barycenter. `Equality` means "pyramid", `Strict` means "not a pyramid";
/// the verdict is cross-checked against the Grünbaum volumes.
pub fn pyramid_equality_check(k: &VPolytope, h: &HalfSpace) -> CheckReport {
    if h.dim() != k.dim() {
        return CheckReport::not_applicable(
            "pyramid-equality",
            "half-space dimension differs from the body",
        );
    }
    let c = cut(k, h);
    if !h.on_boundary(&c.barycenter) {
        return CheckReport::not_applicable(
            "pyramid-equality",
            "hyperplane does not pass through the barycenter",
        )
        .with_value("barycenter", c.barycenter);
    }
    pyramid_report(k, h, &c)
}

/// Grünbaum cuts by the hyperplanes through the barycenter parallel to each
/// facet, keeping the side away from the facet. Aggregated into one report
/// whose status is the worst over all cuts.
pub fn grunbaum_facet_cuts(k: &VPolytope) -> CheckReport {
    let b = barycenter(k);
    let vol = volume(k);
    let mut status = Status::NotApplicable;
    let mut equalities = 0usize;
    let mut min_ratio: Option<Rational> = None;
    let mut first_bad = None;
    for f in k.h().facets() {
        let normal = f.normal().clone();
        let h = HalfSpace::new(normal.clone(), normal.dot(&b)).expect("facet normals are nonzero");
        let r = grunbaum_report(k, &h, cut_with(k, &h, vol.clone(), b.clone()));
        if r.status == Status::Equality {
            equalities += 1;
        }
        if r.status == Status::Violation && first_bad.is_none() {
            first_bad = Some(r.clone());
        }
        if let (Some(captured), Some(vol)) = (r.scalar("captured_volume"), r.scalar("volume")) {
            if vol.is_positive() {
                let ratio = captured / vol;
                if min_ratio.as_ref().is_none_or(|m| &ratio < m) {
                    min_ratio = Some(ratio);
                }
            }
        }
        status = status.worst(r.status);
    }
    let mut report = CheckReport::new("grunbaum", status)
        .with_input("dim", k.dim())
        .with_input("cuts", "facet-parallel through barycenter")
        .with_value("cuts", k.h().facets().len())
        .with_value("equalities", equalities)
        .with_bound(grunbaum_fraction(k.dim()));
    if let Some(m) = min_ratio {
        report = report.with_value("min_fraction", m);
    }
    if let Some(bad) = first_bad {
        report = report.with_witness(Witness::Report(Box::new(bad)));
    }
    report
}
