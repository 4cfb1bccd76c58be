//! Unimodular normal form of lattice polytopes.
//!
//! The vertex–facet pairing matrix `PM[f][v] = b_f - <a_f, v>` (lattice
//! distances, invariant under affine lattice automorphisms) is brought to its
//! lexicographically maximal form over all row and column permutations. Every
//! vertex order realizing that maximum is then fed to a Hermite normal form of
//! the edge matrix `(v_j - v_0)_j`, and the lexicographically smallest result
//! is the canonical vertex matrix.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::hnf::{hermite_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::kernel::{
    affine_image, matrix, LatticePoint, Point, Rational, RationalAffineMap, UnimodularAffineMap,
    VPolytope,
};

/// Largest dimension handled by the permutation search.
pub const MAX_NORMAL_FORM_DIM: usize = 4;

#[derive(Clone, Debug)]
pub struct NormalFormSource {
    /// `vertex_order[j]` is the index (into the input's vertex list) of the
    /// vertex sent to canonical column `j`.
    pub vertex_order: Vec<usize>,
    pub facet_order: Vec<usize>,
    /// Carries the input polytope onto the canonical vertex matrix columns.
    pub transform: UnimodularAffineMap,
}

/// Canonical representative of a unimodular equivalence class. Equality and
/// ordering ignore the source.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub pairing: IntMatrix,
    /// `n x (#vertices)` integer matrix; column `j` is the `j`-th canonical vertex.
    pub vertices: IntMatrix,
    pub source: NormalFormSource,
}

impl NormalForm {
    fn key(&self) -> (&IntMatrix, &IntMatrix) {
        (&self.pairing, &self.vertices)
    }

    /// The canonical representative as a polytope.
    pub fn polytope(&self) -> VPolytope {
        let n = self.vertices.len();
        let m = self.vertices.first().map_or(0, Vec::len);
        let pts = (0..m)
            .map(|j| {
                LatticePoint::new((0..n).map(|i| self.vertices[i][j].clone()).collect()).to_point()
            })
            .collect();
        VPolytope::from_points(pts).expect("canonical vertices span the space")
    }
}

impl PartialEq for NormalForm {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for NormalForm {}

impl PartialOrd for NormalForm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormalForm {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl std::hash::Hash for NormalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

fn pairing_matrix(q: &VPolytope) -> IntMatrix {
    q.h()
        .facets()
        .iter()
        .map(|f| {
            q.vertices()
                .iter()
                .map(|v| f.slack(v).to_integer())
                .collect()
        })
        .collect()
}

#[derive(Clone)]
struct Partial {
    rows: Vec<usize>,
    /// Ordered blocks of columns not yet distinguished by the chosen rows.
    blocks: Vec<Vec<usize>>,
}

/// All (row order, column order) pairs attaining the lexicographically
/// maximal permuted pairing matrix, returned with that matrix.
fn maximal_orders(pm: &IntMatrix) -> (IntMatrix, Vec<(Vec<usize>, Vec<usize>)>) {
    let nrows = pm.len();
    let ncols = pm.first().map_or(0, Vec::len);
    let mut partials = vec![Partial {
        rows: Vec::new(),
        blocks: vec![(0..ncols).collect()],
    }];
    let mut canonical = Vec::with_capacity(nrows);
    for _ in 0..nrows {
        let mut best: Option<Vec<BigInt>> = None;
        let mut next: Vec<Partial> = Vec::new();
        for partial in &partials {
            for r in (0..nrows).filter(|r| !partial.rows.contains(r)) {
                let mut row_values = Vec::with_capacity(ncols);
                let mut blocks = Vec::with_capacity(partial.blocks.len());
                for block in &partial.blocks {
                    let mut sorted = block.clone();
                    sorted.sort_by(|&a, &b| pm[r][b].cmp(&pm[r][a]).then(a.cmp(&b)));
                    let mut start = 0;
                    while start < sorted.len() {
                        let value = &pm[r][sorted[start]];
                        let end = start
                            + sorted[start..]
                                .iter()
                                .take_while(|&&c| &pm[r][c] == value)
                                .count();
                        row_values.extend(std::iter::repeat_n(value.clone(), end - start));
                        blocks.push(sorted[start..end].to_vec());
                        start = end;
                    }
                }
                let ord = best
                    .as_ref()
                    .map_or(Ordering::Greater, |b| row_values.cmp(b));
                if ord == Ordering::Less {
                    continue;
                }
                if ord == Ordering::Greater {
                    best = Some(row_values);
                    next.clear();
                }
                let mut rows = partial.rows.clone();
                rows.push(r);
                next.push(Partial { rows, blocks });
            }
        }
        canonical.push(best.expect("at least one row remains"));
        partials = next;
    }
    let orders = partials
        .into_iter()
        .map(|p| (p.rows, p.blocks.into_iter().flatten().collect()))
        .collect();
    (canonical, orders)
}

/// Unimodular normal form of a full-dimensional lattice polytope.
pub fn normal_form(q: &VPolytope) -> Result<NormalForm> {
    if !q.is_lattice() {
        return Err(Error::NotLatticePolytope);
    }
    let n = q.dim();
    if n > MAX_NORMAL_FORM_DIM {
        return Err(Error::DimensionUnsupported {
            dim: n,
            max: MAX_NORMAL_FORM_DIM,
        });
    }
    let verts: Vec<LatticePoint> = q
        .vertices()
        .iter()
        .map(|v| v.to_lattice().expect("lattice polytope"))
        .collect();
    let (pairing, orders) = maximal_orders(&pairing_matrix(q));

    let mut seen = BTreeSet::new();
    let mut best: Option<(IntMatrix, IntMatrix, Vec<usize>, Vec<usize>)> = None;
    for (facet_order, vertex_order) in orders {
        if !seen.insert(vertex_order.clone()) {
            continue;
        }
        let base = &verts[vertex_order[0]];
        let edges: IntMatrix = (0..n)
            .map(|i| {
                vertex_order
                    .iter()
                    .map(|&j| &verts[j].coords()[i] - &base.coords()[i])
                    .collect()
            })
            .collect();
        let (h, u) = hermite_normal_form(&edges);
        if best.as_ref().is_none_or(|(bh, ..)| h < *bh) {
            best = Some((h, u, vertex_order, facet_order));
        }
    }
    let (vertices, u, vertex_order, facet_order) = best.expect("at least one ordering");

    // x ↦ U (x - base)
    let base = verts[vertex_order[0]].to_point();
    let shift = matrix::mul_vec(&matrix::from_ints(&u), base.coords());
    let translation = LatticePoint::new(shift.iter().map(|c| -c.to_integer()).collect());
    let transform = UnimodularAffineMap::new(u, translation)?;
    Ok(NormalForm {
        pairing,
        vertices,
        source: NormalFormSource {
            vertex_order,
            facet_order,
            transform,
        },
    })
}

/// A verified unimodular map `f` with `f(a) = b`, or `None` when the
/// polytopes are not unimodularly equivalent.
pub fn are_equivalent(a: &VPolytope, b: &VPolytope) -> Result<Option<UnimodularAffineMap>> {
    if !a.is_lattice() || !b.is_lattice() {
        return Err(Error::NotLatticePolytope);
    }
    if a.dim() != b.dim() || a.num_vertices() != b.num_vertices() {
        return Ok(None);
    }
    if a == b {
        return Ok(Some(UnimodularAffineMap::identity(a.dim())));
    }
    let na = normal_form(a)?;
    let nb = normal_form(b)?;
    if na != nb {
        return Ok(None);
    }
    let f = nb.source.transform.inverse().compose(&na.source.transform);
    let image = affine_image(a, &f.to_rational())?;
    if &image != b {
        return Err(Error::Invariant(
            "equal normal forms but the composed map does not carry A onto B".into(),
        ));
    }
    Ok(Some(f))
}

/// A verified unimodular map carrying `k` onto `multiplier * Δ_n`, if one exists.
///
/// Works in every dimension: `k` must be a lattice simplex whose edge vectors
/// from one vertex, divided by `multiplier`, form a unimodular matrix.
pub fn is_multiple_of_unimodular_simplex(
    k: &VPolytope,
    multiplier: &BigInt,
) -> Option<UnimodularAffineMap> {
    let n = k.dim();
    if !k.is_simplex() || !k.is_lattice() || multiplier <= &BigInt::zero() {
        return None;
    }
    let target = VPolytope::standard_simplex(n, &Rational::from_integer(multiplier.clone()));
    let scale = Rational::from_integer(multiplier.clone());
    for (b, base) in k.vertices().iter().enumerate() {
        // Columns (w_i - base) / multiplier.
        let others: Vec<&Point> = k
            .vertices()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != b)
            .map(|(_, v)| v)
            .collect();
        let cols: matrix::Matrix = (0..n)
            .map(|i| {
                others
                    .iter()
                    .map(|w| (&w.coords()[i] - &base.coords()[i]) / &scale)
                    .collect()
            })
            .collect();
        let Some(inv) = matrix::inverse(&cols) else {
            continue;
        };
        let Some(int_inv) = matrix::to_ints(&inv) else {
            continue;
        };
        // Permuting the target axes is a symmetry of multiplier * Δ_n; sort
        // the rows so the map is as close to the identity as possible.
        let mut int_inv = int_inv;
        int_inv.sort_by(|a, b| b.cmp(a));
        let inv = matrix::from_ints(&int_inv);
        let shift = matrix::mul_vec(&inv, base.coords());
        let translation = Point::new(shift.into_iter().map(|c| -c).collect());
        let Ok(rational) = RationalAffineMap::new(inv, translation) else {
            continue;
        };
        let Some(f) = rational.to_unimodular() else {
            continue;
        };
        if affine_image(k, &f.to_rational()).ok().as_ref() == Some(&target) {
            return Some(f);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    fn poly(data: &[&[i64]]) -> VPolytope {
        VPolytope::from_points(data.iter().map(|c| Point::from_ints(c)).collect()).unwrap()
    }

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    fn three_simplex() -> VPolytope {
        VPolytope::standard_simplex(2, &int(3))
    }

    #[test]
    fn unimodular_images_share_normal_form() {
        let f =
            UnimodularAffineMap::new(big(&[&[1, 1], &[0, 1]]), LatticePoint::from_ints(&[5, -7]))
                .unwrap();
        let image = affine_image(&three_simplex(), &f.to_rational()).unwrap();
        assert_eq!(
            normal_form(&three_simplex()).unwrap(),
            normal_form(&image).unwrap()
        );
    }

    #[test]
    fn different_polytopes_differ() {
        let square = VPolytope::cube(2, &int(0), &int(2));
        assert_ne!(
            normal_form(&three_simplex()).unwrap(),
            normal_form(&square).unwrap()
        );
        // Same vertex count, different lattice structure.
        let fat = poly(&[&[0, 0], &[2, 0], &[0, 1]]);
        let thin = poly(&[&[0, 0], &[1, 0], &[0, 2]]);
        assert_eq!(normal_form(&fat).unwrap(), normal_form(&thin).unwrap());
        let skew = poly(&[&[0, 0], &[2, 1], &[1, 2]]);
        assert_ne!(normal_form(&fat).unwrap(), normal_form(&skew).unwrap());
    }

    #[test]
    fn translation_invariance() {
        let d = VPolytope::standard_simplex(3, &int(1));
        let moved = d.translate(&Point::from_ints(&[4, -1, 9]));
        assert_eq!(normal_form(&d).unwrap(), normal_form(&moved).unwrap());
    }

    #[test]
    fn normal_form_transform_hits_canonical_polytope() {
        let q = poly(&[&[-1, -1], &[2, -1], &[-1, 2]]);
        let nf = normal_form(&q).unwrap();
        let image = affine_image(&q, &nf.source.transform.to_rational()).unwrap();
        assert_eq!(image, nf.polytope());
    }

    #[test]
    fn unsupported_dimension_and_non_lattice() {
        let big_cube = VPolytope::cube(5, &int(0), &int(1));
        assert!(matches!(
            normal_form(&big_cube),
            Err(Error::DimensionUnsupported { .. })
        ));
        let half = VPolytope::standard_simplex(2, &Rational::new(1.into(), 2.into()));
        assert_eq!(normal_form(&half).unwrap_err(), Error::NotLatticePolytope);
    }

    #[test]
    fn equivalence_witnesses() {
        let centered = three_simplex().translate(&-&Point::ones(2));
        let f = are_equivalent(&centered, &three_simplex())
            .unwrap()
            .unwrap();
        assert_eq!(
            affine_image(&centered, &f.to_rational()).unwrap(),
            three_simplex()
        );
        let square = VPolytope::cube(2, &int(0), &int(2));
        assert_eq!(are_equivalent(&three_simplex(), &square).unwrap(), None);
        assert_eq!(
            are_equivalent(&square, &square).unwrap(),
            Some(UnimodularAffineMap::identity(2))
        );
    }

    #[test]
    fn simplex_multiple_recognition() {
        let centered = three_simplex().translate(&-&Point::ones(2));
        let f = is_multiple_of_unimodular_simplex(&centered, &BigInt::from(3)).unwrap();
        assert_eq!(
            f,
            UnimodularAffineMap::translation_by(LatticePoint::from_ints(&[1, 1]))
        );
        let sq = VPolytope::cube(2, &int(-1), &int(1));
        assert!(is_multiple_of_unimodular_simplex(&sq, &BigInt::from(3)).is_none());
        for n in 1..=6 {
            let s = VPolytope::standard_simplex(n, &int(4));
            let g = is_multiple_of_unimodular_simplex(&s, &BigInt::from(4)).unwrap();
            assert_eq!(g, UnimodularAffineMap::identity(n));
            assert!(is_multiple_of_unimodular_simplex(&s, &BigInt::from(3)).is_none());
        }
    }
}
