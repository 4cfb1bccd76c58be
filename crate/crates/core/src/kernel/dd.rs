//! Double-description method for polyhedral cones `{y : A y >= 0}`.
//!
//! Rows are inserted one at a time. The cone starts as all of `Q^d` (every
//! basis vector a lineality direction); a row that is not identically zero on
//! the lineality space consumes one lineality direction, otherwise the rays
//! are split by sign and adjacent pairs are combined. Adjacency uses the
//! combinatorial test on zero sets, which is exact for a minimal ray set.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rational::{make_primitive, primitive_integers, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn empty(rows: usize) -> Self {
        ZeroSet(vec![0; rows.div_ceil(64).max(1)])
    }

    fn full_prefix(rows: usize, upto: usize) -> Self {
        let mut s = Self::empty(rows);
        for i in 0..upto {
            s.insert(i);
        }
        s
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_superset_of(&self, other: &ZeroSet) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & b == *b)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug)]
struct Ray {
    vector: Vec<BigInt>,
    zeros: ZeroSet,
}

/// Extreme rays (one primitive integer representative each, in no particular
/// order) and a basis of the lineality space.
#[derive(Clone, Debug, Default)]
pub(crate) struct ConeGenerators {
    pub rays: Vec<Vec<Rational>>,
    pub lineality: Vec<Vec<Rational>>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter()
        .zip(b)
        .fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// `primitive(alpha * y - beta * x)`.
fn combine(alpha: &BigInt, y: &[BigInt], beta: &BigInt, x: &[BigInt]) -> Vec<BigInt> {
    make_primitive(
        y.iter()
            .zip(x)
            .map(|(yi, xi)| alpha * yi - beta * xi)
            .collect(),
    )
}

fn to_rationals(v: Vec<BigInt>) -> Vec<Rational> {
    v.into_iter().map(Rational::from_integer).collect()
}

/// Generators of `{y in Q^dim : row . y >= 0 for every row}`.
///
/// Runs over primitive integer vectors throughout; every update is a
/// positive combination followed by division by the content, so no
/// fractions arise.
pub(crate) fn cone_generators(dim: usize, rows: &[Vec<Rational>]) -> ConeGenerators {
    let rows: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integers(r)).collect();
    let total = rows.len();
    let mut lineality: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| {
            let mut e = vec![BigInt::zero(); dim];
            e[i] = BigInt::one();
            e
        })
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, row) in rows.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !dot(row, l).is_zero()) {
            let mut pivot = lineality.swap_remove(pos);
            let mut pv = dot(row, &pivot);
            if pv.is_negative() {
                pivot = pivot.iter().map(|x| -x).collect();
                pv = -pv;
            }
            // Project the remaining generators onto the hyperplane row . y = 0;
            // pv > 0 keeps the orientation of rays.
            for l in lineality.iter_mut() {
                let a = dot(row, l);
                if !a.is_zero() {
                    *l = combine(&pv, l, &a, &pivot);
                }
            }
            for r in rays.iter_mut() {
                let a = dot(row, &r.vector);
                if !a.is_zero() {
                    r.vector = combine(&pv, &r.vector, &a, &pivot);
                }
                r.zeros.insert(k);
            }
            rays.push(Ray {
                vector: make_primitive(pivot),
                zeros: ZeroSet::full_prefix(total, k),
            });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.vector)).collect();
        let positive: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_positive())
            .collect();
        let negative: Vec<usize> = (0..rays.len())
            .filter(|&i| values[i].is_negative())
            .collect();
        if negative.is_empty() {
            for (r, v) in rays.iter_mut().zip(&values) {
                if v.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        // Two rays are adjacent iff their common zero set is large enough and
        // is not contained in the zero set of any third ray.
        let min_common = (dim - lineality.len()).saturating_sub(2);
        let mut created = Vec::new();
        for &p in &positive {
            for &n in &negative {
                let common = rays[p].zeros.intersect(&rays[n].zeros);
                if common.len() < min_common {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != n && r.zeros.is_superset_of(&common));
                if blocked {
                    continue;
                }
                let mut zeros = common;
                zeros.insert(k);
                created.push(Ray {
                    vector: combine(&values[p], &rays[n].vector, &values[n], &rays[p].vector),
                    zeros,
                });
            }
        }

        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, v) in rays.into_iter().zip(&values) {
            if v.is_negative() {
                continue;
            }
            if v.is_zero() {
                r.zeros.insert(k);
            }
            next.push(r);
        }
        next.extend(created);
        rays = next;
    }

    ConeGenerators {
        rays: rays.into_iter().map(|r| to_rationals(r.vector)).collect(),
        lineality: lineality.into_iter().map(to_rationals).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::int;

    fn rows(data: &[&[i64]]) -> Vec<Vec<Rational>> {
        data.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    fn sorted(mut v: Vec<Vec<Rational>>) -> Vec<Vec<Rational>> {
        v.sort();
        v
    }

    #[test]
    fn positive_orthant() {
        let g = cone_generators(3, &rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert!(g.lineality.is_empty());
        assert_eq!(sorted(g.rays), rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn square_cone_has_four_rays() {
        // Homogenization of [-1,1]^2: t >= x, t >= -x, t >= y, t >= -y.
        let g = cone_generators(
            3,
            &rows(&[&[-1, 0, 1], &[1, 0, 1], &[0, -1, 1], &[0, 1, 1]]),
        );
        assert!(g.lineality.is_empty());
        assert_eq!(
            sorted(g.rays),
            rows(&[&[-1, -1, 1], &[-1, 1, 1], &[1, -1, 1], &[1, 1, 1]])
        );
    }

    #[test]
    fn half_plane_keeps_lineality() {
        let g = cone_generators(2, &rows(&[&[1, 0]]));
        assert_eq!(g.lineality.len(), 1);
        assert_eq!(g.rays, rows(&[&[1, 0]]));
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let g = cone_generators(2, &rows(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1]]));
        assert_eq!(sorted(g.rays), rows(&[&[0, 1], &[1, 0]]));
    }
}
