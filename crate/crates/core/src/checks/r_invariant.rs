use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::kernel::{
    affine_image, barycenter, volume, Point, Rational, RationalAffineMap, VPolytope,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RInvariantResult {
    pub barycenter: Point,
    /// Where the ray from the barycenter away from it through the origin
    /// leaves the body; absent when the barycenter is the origin.
    pub boundary_point: Option<Point>,
    /// `R(K)` in `(0, 1]`.
    pub value: Rational,
}

/// `R(K) = |x_K| / |x_K - b_K|`, or 1 when `b_K = 0`.
///
/// Along `x(λ) = λ b_K` the body is left at the smallest feasible `λ* < 0`,
/// namely `max { c / <a, b_K> : <a, b_K> < 0 }` over facets `<a, x> <= c`.
/// Then `x_K = λ* b_K` and `R = λ* / (λ* - 1)`.
pub fn r_invariant(k: &VPolytope) -> Result<RInvariantResult> {
    let origin = Point::zeros(k.dim());
    if !k.contains(&origin, true) {
        return Err(Error::OriginNotInterior);
    }
    let b = barycenter(k);
    if b.is_zero() {
        return Ok(RInvariantResult {
            barycenter: b,
            boundary_point: None,
            value: Rational::one(),
        });
    }
    let lambda = k
        .h()
        .facets()
        .iter()
        .filter_map(|f| {
            let ab = f.normal().dot(&b);
            ab.is_negative().then(|| f.offset() / ab)
        })
        .max()
        .expect("a bounded body is left in every direction");
    let value = &lambda / (&lambda - Rational::one());
    Ok(RInvariantResult {
        boundary_point: Some(b.scale(&lambda)),
        barycenter: b,
        value,
    })
}

/// The homothety `x ↦ r (x - b_K)`.
pub fn shrink_map(r: &RInvariantResult) -> RationalAffineMap {
    let shift = -&r.barycenter.scale(&r.value);
    RationalAffineMap::homothety(&r.value, shift).expect("R(K) > 0")
}

/// `K' = R(K) (K - b_K)`, verified to lie in `K`, to have barycenter 0 and
/// volume `R(K)^n vol(K)`. Interior lattice points of `K'` are then a subset
/// of those of `K` that contains the origin.
pub fn shrink_to_barycenter(k: &VPolytope) -> Result<VPolytope> {
    let r = r_invariant(k)?;
    if r.value.is_one() {
        return Ok(k.clone());
    }
    let shrunk = affine_image(k, &shrink_map(&r))?;
    if !shrunk.vertices().iter().all(|v| k.contains(v, false)) {
        return Err(Error::Invariant("shrunk body is not contained in K".into()));
    }
    if !barycenter(&shrunk).is_zero() {
        return Err(Error::Invariant("shrunk body is not centered".into()));
    }
    let ratio = crate::kernel::rational::pow(&r.value, k.dim());
    if volume(&shrunk) != ratio * volume(k) {
        return Err(Error::Invariant(
            "volume of shrunk body is not R^n vol(K)".into(),
        ));
    }
    Ok(shrunk)
}
