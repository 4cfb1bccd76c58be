use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::{self, Matrix};
use super::point::{LatticePoint, Point};
use super::polytope::VPolytope;
use super::rational::Rational;
use crate::error::{Error, Result};

/// `x ↦ M x + t` with rational `M` (invertible) and `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalAffineMap {
    matrix: Matrix,
    translation: Point,
}

impl RationalAffineMap {
    pub fn new(matrix: Matrix, translation: Point) -> Result<Self> {
        let n = translation.dim();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.len(),
            });
        }
        if matrix::determinant(&matrix).is_zero() {
            return Err(Error::SingularMap);
        }
        Ok(RationalAffineMap {
            matrix,
            translation,
        })
    }

    pub fn identity(dim: usize) -> Self {
        RationalAffineMap {
            matrix: matrix::identity(dim),
            translation: Point::zeros(dim),
        }
    }

    pub fn translation_by(shift: Point) -> Self {
        RationalAffineMap {
            matrix: matrix::identity(shift.dim()),
            translation: shift,
        }
    }

    /// `x ↦ factor * x + shift`.
    pub fn homothety(factor: &Rational, shift: Point) -> Result<Self> {
        let n = shift.dim();
        let m = matrix::identity(n)
            .into_iter()
            .map(|r| r.into_iter().map(|v| v * factor).collect())
            .collect();
        Self::new(m, shift)
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn translation(&self) -> &Point {
        &self.translation
    }

    pub fn det(&self) -> Rational {
        matrix::determinant(&self.matrix)
    }

    pub fn apply(&self, x: &Point) -> Point {
        &Point::new(matrix::mul_vec(&self.matrix, x.coords())) + &self.translation
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RationalAffineMap) -> RationalAffineMap {
        RationalAffineMap {
            matrix: matrix::mul(&self.matrix, &inner.matrix),
            translation: self.apply(&inner.translation),
        }
    }

    pub fn inverse(&self) -> RationalAffineMap {
        let inv = matrix::inverse(&self.matrix).expect("affine map is invertible");
        let t = matrix::mul_vec(&inv, self.translation.coords());
        RationalAffineMap {
            matrix: inv,
            translation: -&Point::new(t),
        }
    }

    /// The integral unimodular map with the same action, if there is one.
    pub fn to_unimodular(&self) -> Option<UnimodularAffineMap> {
        let m = matrix::to_ints(&self.matrix)?;
        let t = self.translation.to_lattice()?;
        UnimodularAffineMap::new(m, t).ok()
    }
}

/// An affine lattice automorphism `x ↦ U x + t` with `U` integral,
/// `|det U| = 1`, and `t` integral.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap {
    matrix: Vec<Vec<BigInt>>,
    translation: LatticePoint,
}

impl UnimodularAffineMap {
    pub fn new(matrix: Vec<Vec<BigInt>>, translation: LatticePoint) -> Result<Self> {
        let n = translation.dim();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: matrix.len(),
            });
        }
        if !matrix::int_determinant(&matrix).abs().is_one() {
            return Err(Error::Precondition("matrix is not unimodular".into()));
        }
        Ok(UnimodularAffineMap {
            matrix,
            translation,
        })
    }

    pub fn identity(dim: usize) -> Self {
        let matrix = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            BigInt::one()
                        } else {
                            BigInt::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        UnimodularAffineMap {
            matrix,
            translation: LatticePoint::new(vec![BigInt::zero(); dim]),
        }
    }

    pub fn translation_by(shift: LatticePoint) -> Self {
        let mut m = Self::identity(shift.dim());
        m.translation = shift;
        m
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn translation(&self) -> &LatticePoint {
        &self.translation
    }

    pub fn to_rational(&self) -> RationalAffineMap {
        RationalAffineMap {
            matrix: matrix::from_ints(&self.matrix),
            translation: self.translation.to_point(),
        }
    }

    pub fn apply(&self, x: &Point) -> Point {
        self.to_rational().apply(x)
    }

    pub fn compose(&self, inner: &UnimodularAffineMap) -> UnimodularAffineMap {
        self.to_rational()
            .compose(&inner.to_rational())
            .to_unimodular()
            .expect("composition of unimodular maps is unimodular")
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        self.to_rational()
            .inverse()
            .to_unimodular()
            .expect("inverse of a unimodular map is unimodular")
    }
}

impl fmt::Display for UnimodularAffineMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x -> [")?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "] x + {}", self.translation)
    }
}

/// Vertex-wise image of `p` under an invertible affine map.
pub fn affine_image(p: &VPolytope, f: &RationalAffineMap) -> Result<VPolytope> {
    if f.dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            found: f.dim(),
        });
    }
    if f.det().is_zero() {
        return Err(Error::SingularMap);
    }
    let vertices = p.vertices().iter().map(|v| f.apply(v)).collect();
    Ok(VPolytope::from_vertices_unchecked(p.dim(), vertices))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};
    use crate::kernel::{barycenter, volume};

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn translation_maps_centered_simplex_onto_corner_simplex() {
        let centered = VPolytope::standard_simplex(2, &int(3)).translate(&-&Point::ones(2));
        let shift = RationalAffineMap::translation_by(Point::ones(2));
        assert_eq!(
            affine_image(&centered, &shift).unwrap(),
            VPolytope::standard_simplex(2, &int(3))
        );
    }

    #[test]
    fn identity_image() {
        let sq = VPolytope::cube(2, &int(0), &int(1));
        assert_eq!(
            affine_image(&sq, &RationalAffineMap::identity(2)).unwrap(),
            sq
        );
    }

    #[test]
    fn scaling_scales_volume() {
        let p = VPolytope::standard_simplex(3, &int(1));
        let r = frac(2, 3);
        let f = RationalAffineMap::homothety(&r, Point::zeros(3)).unwrap();
        let img = affine_image(&p, &f).unwrap();
        assert_eq!(volume(&img), volume(&p) * &r * &r * &r);
        assert_eq!(barycenter(&img), f.apply(&barycenter(&p)));
    }

    #[test]
    fn singular_maps_are_rejected() {
        let zero = vec![vec![int(0), int(0)], vec![int(0), int(1)]];
        assert_eq!(
            RationalAffineMap::new(zero, Point::zeros(2)).unwrap_err(),
            Error::SingularMap
        );
    }

    #[test]
    fn unimodular_inverse_and_compose() {
        let f =
            UnimodularAffineMap::new(big(&[&[1, 1], &[0, 1]]), LatticePoint::from_ints(&[5, -7]))
                .unwrap();
        let id = f.compose(&f.inverse());
        assert_eq!(id, UnimodularAffineMap::identity(2));
        assert!(UnimodularAffineMap::new(
            big(&[&[2, 0], &[0, 1]]),
            LatticePoint::from_ints(&[0, 0])
        )
        .is_err());
    }
}
