//! Dense exact linear algebra on row-major `Vec<Vec<Rational>>` matrices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::point::Point;
use super::rational::{common_denominator, Rational};

pub type Matrix = Vec<Vec<Rational>>;

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn from_ints(rows: &[Vec<BigInt>]) -> Matrix {
    rows.iter()
        .map(|r| r.iter().cloned().map(Rational::from_integer).collect())
        .collect()
}

/// Converts to an integer matrix if every entry is integral.
pub fn to_ints(m: &Matrix) -> Option<Vec<Vec<BigInt>>> {
    m.iter()
        .map(|r| {
            r.iter()
                .map(|v| v.is_integer().then(|| v.to_integer()))
                .collect()
        })
        .collect()
}

/// Fraction-free Bareiss elimination in place. Returns the rank and, for a
/// square full-rank input, the determinant.
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            sign = !sign;
        }
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[r][c] * &m[i][j] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    let det = if r == rows && rows == cols {
        if sign {
            -prev
        } else {
            prev
        }
    } else {
        BigInt::zero()
    };
    (r, det)
}

/// Clears denominators row by row; returns the integer rows and the product
/// of the row scales.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|r| {
            let d = common_denominator(r);
            let row = r.iter().map(|v| (v * &d).to_integer()).collect();
            scale *= d;
            row
        })
        .collect();
    (rows, scale)
}

pub fn determinant(m: &Matrix) -> Rational {
    let n = m.len();
    assert!(
        m.iter().all(|r| r.len() == n),
        "determinant of a non-square matrix"
    );
    if n == 0 {
        return Rational::one();
    }
    let (mut ints, scale) = integer_rows(m);
    Rational::new(bareiss(&mut ints).1, scale)
}

pub fn int_determinant(m: &[Vec<BigInt>]) -> BigInt {
    if m.is_empty() {
        return BigInt::one();
    }
    assert!(
        m.iter().all(|r| r.len() == m.len()),
        "determinant of a non-square matrix"
    );
    bareiss(&mut m.to_vec()).1
}

pub fn rank(m: &Matrix) -> usize {
    bareiss(&mut integer_rows(m).0).0
}

/// Dimension of the affine hull of `points` (`None` for an empty set).
pub fn affine_rank(points: &[&Point]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    let diffs: Matrix = rest.iter().map(|p| (*p - *first).into_coords()).collect();
    Some(if diffs.is_empty() { 0 } else { rank(&diffs) })
}

pub fn inverse(m: &Matrix) -> Option<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .zip(identity(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !aug[i][c].is_zero())?;
        aug.swap(p, c);
        let pivot = aug[c][c].clone();
        for v in aug[c].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..n {
            if i == c || aug[i][c].is_zero() {
                continue;
            }
            let q = aug[i][c].clone();
            for j in 0..2 * n {
                let delta = &q * &aug[c][j];
                aug[i][j] -= delta;
            }
        }
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mul_vec(m: &Matrix, v: &[Rational]) -> Vec<Rational> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
        })
        .collect()
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .fold(Rational::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::rational::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(&m(&[&[1, 1], &[0, 1]])), int(1));
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), int(-1));
        assert_eq!(determinant(&m(&[&[2, 4], &[1, 2]])), int(0));
        assert_eq!(
            determinant(&m(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]])),
            int(2 * (3 - 2) - 0 + (1 - 3))
        );
    }

    #[test]
    fn inverse_round_trip() {
        let a = m(&[&[2, 1], &[7, 4]]);
        let inv = inverse(&a).unwrap();
        assert_eq!(mul(&a, &inv), identity(2));
        assert!(inverse(&m(&[&[1, 2], &[2, 4]])).is_none());
        let b = vec![vec![frac(1, 2), int(0)], vec![int(3), frac(2, 3)]];
        assert_eq!(mul(&inverse(&b).unwrap(), &b), identity(2));
    }

    #[test]
    fn affine_rank_of_collinear_points() {
        let pts = [
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[2, 0]),
        ];
        let refs: Vec<&Point> = pts.iter().collect();
        assert_eq!(affine_rank(&refs), Some(1));
        assert_eq!(affine_rank(&[]), None);
    }
}
