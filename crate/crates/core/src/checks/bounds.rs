use num_bigint::BigInt;

use super::equality::certify_equality;
use super::r_invariant::r_invariant;
use super::report::{CheckReport, Status, Witness};
use crate::kernel::rational::{ehrhart_bound, pow};
use crate::kernel::{barycenter, intersect_polytopes, volume, LatticePoint, Rational, VPolytope};
use crate::lattice::interior_lattice_points;

fn only_origin_inside(k: &VPolytope) -> bool {
    interior_lattice_points(k) == [LatticePoint::new(vec![0.into(); k.dim()])]
}

fn power_of(base: i64, n: usize) -> Rational {
    Rational::from_integer(BigInt::from(base).pow(n as u32))
}

/// `vol(K ∩ -K)`.
fn symmetric_core_volume(k: &VPolytope) -> Rational {
    intersect_polytopes(k.h(), k.neg().h())
        .expect("same dimension")
        .volume()
}

/// Classical and `R`-weighted Ehrhart bounds for a body whose only interior
/// lattice point is the origin.
pub fn ehrhart_check(k: &VPolytope) -> CheckReport {
    const NAME: &str = "ehrhart";
    let n = k.dim();
    if !only_origin_inside(k) {
        return CheckReport::not_applicable(
            NAME,
            "interior lattice points are not exactly the origin",
        );
    }
    let vol = volume(k);
    let r = r_invariant(k).expect("origin is an interior point");
    let classical = ehrhart_bound(n);
    let generalized = &classical / pow(&r.value, n);
    let status = Status::of_le(&vol, &generalized);

    let mut report = CheckReport::new(NAME, status)
        .with_input("dim", n)
        .with_value("volume", &vol)
        .with_value("barycenter", &r.barycenter)
        .with_value("r_invariant", &r.value);
    if r.barycenter.is_zero() {
        report = report
            .with_value("classical_bound", &classical)
            .with_value("classical_status", Status::of_le(&vol, &classical).as_str());
    }
    report = report
        .with_value("generalized_bound", &generalized)
        .with_value("generalized_status", status.as_str())
        .with_bound(generalized);

    if status == Status::Equality {
        match certify_equality(k) {
            Ok(Some(map)) => report = report.with_witness(Witness::Map(map)),
            Ok(None) => {
                report.status = Status::Violation;
                report = report
                    .with_reason("equality detected but certification found no extremal volume");
            }
            Err(e) => {
                report.status = Status::Violation;
                report = report.with_reason(e.to_string());
            }
        }
    }
    report
}

/// `vol(K) <= 2^n vol(K ∩ -K)` for bodies with barycenter at the origin.
pub fn milman_pajor_check(k: &VPolytope) -> CheckReport {
    const NAME: &str = "milman-pajor";
    let b = barycenter(k);
    if !b.is_zero() {
        return CheckReport::not_applicable(NAME, "barycenter is not the origin")
            .with_value("barycenter", b);
    }
    let n = k.dim();
    let vol = volume(k);
    let core = symmetric_core_volume(k);
    let bound = power_of(2, n) * &core;
    CheckReport::new(NAME, Status::of_le(&vol, &bound))
        .with_input("dim", n)
        .with_value("volume", &vol)
        .with_value("symmetric_volume", &core)
        .with_bound(bound)
}

/// Minkowski's first theorem on `K ∩ -K` followed by Milman–Pajor:
/// `vol(K ∩ -K) <= 2^n` and `vol(K) <= 4^n`.
pub fn minkowski_combined_check(k: &VPolytope) -> CheckReport {
    const NAME: &str = "minkowski";
    let b = barycenter(k);
    if !b.is_zero() {
        return CheckReport::not_applicable(NAME, "barycenter is not the origin")
            .with_value("barycenter", b);
    }
    if !only_origin_inside(k) {
        return CheckReport::not_applicable(
            NAME,
            "interior lattice points are not exactly the origin",
        );
    }
    let n = k.dim();
    let vol = volume(k);
    let core = symmetric_core_volume(k);
    let minkowski_bound = power_of(2, n);
    let combined_bound = power_of(4, n);
    let minkowski = Status::of_le(&core, &minkowski_bound);
    let combined = Status::of_le(&vol, &combined_bound);
    CheckReport::new(NAME, minkowski.worst(combined))
        .with_input("dim", n)
        .with_value("symmetric_volume", &core)
        .with_value("minkowski_bound", &minkowski_bound)
        .with_value("minkowski_margin", &minkowski_bound - &core)
        .with_value("minkowski_status", minkowski.as_str())
        .with_value("volume", &vol)
        .with_value("margin", &combined_bound - &vol)
        .with_value("combined_status", combined.as_str())
        .with_bound(combined_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};
    use crate::kernel::{Point, UnimodularAffineMap};

    fn centered_triangle() -> VPolytope {
        VPolytope::standard_simplex(2, &int(3)).translate(&-&Point::ones(2))
    }

    fn counterexample() -> VPolytope {
        let v = |a, b, c, d| Point::new(vec![frac(a, b), frac(c, d)]);
        VPolytope::from_points(vec![
            v(3, 2, 1, 4),
            v(-3, 2, -1, 4),
            v(3, 2, 5, 4),
            v(-3, 2, -5, 4),
        ])
        .unwrap()
    }

    #[test]
    fn ehrhart_equality_case() {
        let r = ehrhart_check(&centered_triangle());
        assert_eq!(r.status, Status::Equality);
        assert_eq!(r.scalar("volume"), Some(&frac(9, 2)));
        assert_eq!(r.bound, Some(frac(9, 2)));
        assert_eq!(
            r.witness_map(),
            Some(&UnimodularAffineMap::translation_by(
                LatticePoint::from_ints(&[1, 1])
            ))
        );
    }

    #[test]
    fn ehrhart_strict_cases() {
        let sq = ehrhart_check(&VPolytope::cube(2, &int(-1), &int(1)));
        assert_eq!(sq.status, Status::Strict);
        assert_eq!(sq.scalar("volume"), Some(&int(4)));

        let k = ehrhart_check(&counterexample());
        assert_eq!(k.status, Status::Strict);
        assert_eq!(k.scalar("volume"), Some(&int(3)));
        assert_eq!(k.scalar("r_invariant"), Some(&int(1)));
        assert_eq!(k.bound, Some(frac(9, 2)));
    }

    #[test]
    fn ehrhart_not_applicable() {
        let big = VPolytope::cube(2, &int(-2), &int(2));
        assert_eq!(ehrhart_check(&big).status, Status::NotApplicable);
    }

    #[test]
    fn milman_pajor_examples() {
        let sq = milman_pajor_check(&VPolytope::cube(2, &int(-1), &int(1)));
        assert_eq!(sq.status, Status::Strict);
        assert_eq!(sq.scalar("symmetric_volume"), Some(&int(4)));
        let tri = milman_pajor_check(&centered_triangle());
        assert_eq!(tri.scalar("symmetric_volume"), Some(&int(3)));
        assert_eq!(tri.bound, Some(int(12)));
        assert_eq!(tri.status, Status::Strict);
        let off = milman_pajor_check(&VPolytope::standard_simplex(2, &int(3)));
        assert_eq!(off.status, Status::NotApplicable);
    }

    #[test]
    fn minkowski_examples() {
        let tri = minkowski_combined_check(&centered_triangle());
        assert_eq!(tri.status, Status::Strict);
        assert_eq!(tri.scalar("symmetric_volume"), Some(&int(3)));
        let sq = minkowski_combined_check(&VPolytope::cube(2, &int(-1), &int(1)));
        assert_eq!(sq.status, Status::Equality);
        assert_eq!(sq.value("minkowski_status"), Some(&"equality".into()));
        assert_eq!(sq.value("combined_status"), Some(&"strict".into()));
        let off = minkowski_combined_check(&VPolytope::standard_simplex(2, &int(3)));
        assert_eq!(off.status, Status::NotApplicable);
    }
}
