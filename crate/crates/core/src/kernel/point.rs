use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{self, Rational};

/// A point (or vector) of `Q^n` with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn zeros(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    /// The all-ones vector `(1, ..., 1)`.
    pub fn ones(dim: usize) -> Self {
        Point(vec![Rational::one(); dim])
    }

    pub fn unit(dim: usize, axis: usize) -> Self {
        let mut p = Self::zeros(dim);
        p.0[axis] = Rational::one();
        p
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dot(&self, other: &Point) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn scale(&self, factor: &Rational) -> Point {
        Point(self.0.iter().map(|c| c * factor).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn to_lattice(&self) -> Option<LatticePoint> {
        self.is_integral()
            .then(|| LatticePoint(self.0.iter().map(|c| c.to_integer()).collect()))
    }
}

impl From<Vec<Rational>> for Point {
    fn from(coords: Vec<Rational>) -> Self {
        Point(coords)
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A point of `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticePoint(Vec<BigInt>);

impl LatticePoint {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticePoint(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        LatticePoint(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn to_point(&self) -> Point {
        Point(self.0.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Nonzero with coordinate gcd 1, i.e. not a proper multiple of another lattice point.
    pub fn is_primitive(&self) -> bool {
        self.0
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
            .is_one()
    }

    pub fn neg(&self) -> LatticePoint {
        LatticePoint(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_point().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::frac;

    #[test]
    fn primitive_lattice_points() {
        assert!(LatticePoint::from_ints(&[1, -2]).is_primitive());
        assert!(!LatticePoint::from_ints(&[2, -2]).is_primitive());
        assert!(!LatticePoint::from_ints(&[0, 0]).is_primitive());
        assert!(LatticePoint::from_ints(&[0, -1]).is_primitive());
    }

    #[test]
    fn integrality() {
        let p = Point::new(vec![frac(3, 2), frac(1, 4)]);
        assert!(p.to_lattice().is_none());
        let q = Point::from_ints(&[1, -2]);
        assert_eq!(q.to_lattice(), Some(LatticePoint::from_ints(&[1, -2])));
        assert_eq!(format!("{p}"), "(3/2, 1/4)");
    }
}
