use num_bigint::BigInt;

use super::r_invariant::{r_invariant, shrink_map};
use crate::error::{Error, Result};
use crate::kernel::rational::{factorial, pow};
use crate::kernel::{affine_image, volume, LatticePoint, Rational, UnimodularAffineMap, VPolytope};
use crate::lattice::{interior_lattice_points, is_multiple_of_unimodular_simplex};

/// When `vol(K) R(K)^n n! = (n+1)^n`, returns a verified unimodular map from
/// `K` onto `(n+1) Δ_n`; otherwise `None`.
///
/// Requires the origin to be the only interior lattice point. Failing to
/// certify at equal volume is reported as
/// [`Error::CertificationContradiction`].
pub fn certify_equality(k: &VPolytope) -> Result<Option<UnimodularAffineMap>> {
    let n = k.dim();
    if interior_lattice_points(k) != [LatticePoint::new(vec![0.into(); n])] {
        return Err(Error::Precondition(
            "interior lattice points are not exactly the origin".into(),
        ));
    }
    let r = r_invariant(k)?;
    let scaled = volume(k) * pow(&r.value, n) * Rational::from_integer(factorial(n));
    let extremal = Rational::from_integer(BigInt::from(n + 1).pow(n as u32));
    if scaled != extremal {
        return Ok(None);
    }

    let shrink = shrink_map(&r);
    let shrunk = affine_image(k, &shrink)?;
    let multiplier = BigInt::from(n + 1);
    let Some(onto_simplex) = is_multiple_of_unimodular_simplex(&shrunk, &multiplier) else {
        return Err(Error::CertificationContradiction(
            "extremal volume but the shrunk body is not a unimodular copy of (n+1)Δn".into(),
        ));
    };
    let Some(composed) = onto_simplex.to_rational().compose(&shrink).to_unimodular() else {
        return Err(Error::CertificationContradiction(
            "extremal volume with R(K) < 1; the shrink map is not a lattice map".into(),
        ));
    };
    let target = VPolytope::standard_simplex(n, &Rational::from_integer(multiplier));
    if affine_image(k, &composed.to_rational())? != target {
        return Err(Error::Invariant(
            "certificate does not carry K onto (n+1)Δn".into(),
        ));
    }
    Ok(Some(composed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;
    use crate::kernel::Point;

    #[test]
    fn centered_triangle_certifies_with_translation() {
        let k = VPolytope::standard_simplex(2, &int(3)).translate(&-&Point::ones(2));
        let f = certify_equality(&k).unwrap().unwrap();
        assert_eq!(
            f,
            UnimodularAffineMap::translation_by(LatticePoint::from_ints(&[1, 1]))
        );
    }

    #[test]
    fn square_is_not_extremal() {
        assert_eq!(
            certify_equality(&VPolytope::cube(2, &int(-1), &int(1))).unwrap(),
            None
        );
    }

    #[test]
    fn precondition() {
        let big = VPolytope::cube(2, &int(-2), &int(2));
        assert!(matches!(
            certify_equality(&big),
            Err(Error::Precondition(_))
        ));
    }
}
