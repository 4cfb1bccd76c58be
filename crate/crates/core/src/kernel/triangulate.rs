//! Pulling triangulation and the exact measures built on it.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::int_determinant;
use super::point::Point;
use super::polytope::VPolytope;
use super::rational::{common_denominator, factorial, Rational};

/// Simplices given as `(n+1)`-tuples of indices into `points`, which is the
/// vertex list of the source polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulation {
    pub points: Vec<Point>,
    pub simplices: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    /// `|det(v_1 - v_0, ..., v_n - v_0)|` for the given cell, i.e. `n!` times its volume.
    pub fn normalized_volume(&self, cell: usize) -> Rational {
        // det(v_i - v_0) = det [v_i 1], evaluated on rows [d_i v_i, d_i].
        let mut scale = BigInt::one();
        let rows: Vec<Vec<BigInt>> = self.simplices[cell]
            .iter()
            .map(|&i| {
                let coords = self.points[i].coords();
                let d = common_denominator(coords);
                let mut row: Vec<BigInt> = coords.iter().map(|c| (c * &d).to_integer()).collect();
                row.push(d.clone());
                scale *= d;
                row
            })
            .collect();
        Rational::new(int_determinant(&rows).abs(), scale)
    }
}

/// Fan from the lexicographically first vertex over a recursive
/// triangulation of the facets not containing it. Deterministic.
pub fn triangulate(p: &VPolytope) -> Triangulation {
    let incidence: Vec<BTreeSet<usize>> = p
        .facet_incidences()
        .into_iter()
        .map(BTreeSet::from_iter)
        .collect();
    let all: Vec<usize> = (0..p.num_vertices()).collect();
    let mut simplices = Vec::new();
    pull(&incidence, &all, p.dim(), &mut Vec::new(), &mut simplices);
    Triangulation {
        points: p.vertices().to_vec(),
        simplices,
    }
}

fn pull(
    incidence: &[BTreeSet<usize>],
    face: &[usize],
    dim: usize,
    apexes: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if face.len() == dim + 1 {
        let mut cell = apexes.clone();
        cell.extend_from_slice(face);
        out.push(cell);
        return;
    }
    let apex = face[0];
    // Facets of a face are the inclusion-maximal proper intersections with
    // facets of the polytope.
    let mut subs: BTreeSet<Vec<usize>> = BTreeSet::new();
    for facet in incidence {
        let sub: Vec<usize> = face.iter().copied().filter(|i| facet.contains(i)).collect();
        if sub.len() >= dim && sub.len() < face.len() {
            subs.insert(sub);
        }
    }
    let maximal: Vec<&Vec<usize>> = subs
        .iter()
        .filter(|s| {
            !subs
                .iter()
                .any(|t| t.len() > s.len() && s.iter().all(|i| t.contains(i)))
        })
        .collect();
    for sub in maximal {
        if sub.contains(&apex) {
            continue;
        }
        apexes.push(apex);
        pull(incidence, sub, dim - 1, apexes, out);
        apexes.pop();
    }
}

/// Exact Euclidean volume.
pub fn volume(p: &VPolytope) -> Rational {
    let t = triangulate(p);
    let total = (0..t.len()).fold(Rational::zero(), |acc, i| acc + t.normalized_volume(i));
    total / Rational::from_integer(factorial(p.dim()))
}

/// Exact centroid: volume-weighted average of the cell centroids.
pub fn barycenter(p: &VPolytope) -> Point {
    let t = triangulate(p);
    let n = p.dim();
    let mut weighted = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    for (i, cell) in t.simplices.iter().enumerate() {
        let w = t.normalized_volume(i);
        for &v in cell {
            for (acc, c) in weighted.iter_mut().zip(t.points[v].coords()) {
                *acc += &w * c;
            }
        }
        total += w;
    }
    let denom = total * Rational::from_integer(BigInt::from(n + 1));
    Point::new(weighted.into_iter().map(|c| c / &denom).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};

    #[test]
    fn simplex_is_one_cell() {
        let t = triangulate(&VPolytope::standard_simplex(3, &int(2)));
        assert_eq!(t.len(), 1);
    }

    #[test]
    fn square_is_two_triangles() {
        let t = triangulate(&VPolytope::cube(2, &int(0), &int(1)));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn polygon_fan_has_n_minus_2_cells() {
        // 16 lattice points in convex position.
        let pts: Vec<Point> = [
            (0, 0),
            (1, 0),
            (3, 1),
            (6, 3),
            (10, 6),
            (15, 10),
            (21, 15),
            (28, 21),
            (28, 22),
            (27, 24),
            (25, 27),
            (22, 31),
            (18, 36),
            (13, 42),
            (7, 49),
            (0, 57),
        ]
        .iter()
        .map(|&(x, y)| Point::from_ints(&[x, y]))
        .collect();
        let p = VPolytope::from_points(pts).unwrap();
        assert_eq!(p.num_vertices(), 16);
        assert_eq!(triangulate(&p).len(), 14);
    }

    #[test]
    fn volumes() {
        assert_eq!(volume(&VPolytope::standard_simplex(2, &int(3))), frac(9, 2));
        for n in 1..=4 {
            assert_eq!(volume(&VPolytope::cube(n, &int(0), &int(1))), int(1));
        }
        assert_eq!(volume(&VPolytope::cube(3, &int(-1), &int(1))), int(8));
    }

    #[test]
    fn barycenters() {
        assert_eq!(
            barycenter(&VPolytope::standard_simplex(2, &int(3))),
            Point::from_ints(&[1, 1])
        );
        assert_eq!(
            barycenter(&VPolytope::cube(3, &int(-1), &int(1))),
            Point::zeros(3)
        );
        assert_eq!(
            barycenter(&VPolytope::standard_simplex(2, &int(1))),
            Point::new(vec![frac(1, 3), frac(1, 3)])
        );
    }
}
