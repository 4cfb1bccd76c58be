//! Row-style Hermite normal form over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect()
        })
        .collect()
}

/// `row[dst] -= q * row[src]`
fn sub_row(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (a, b) = if dst < src {
        let (lo, hi) = m.split_at_mut(src);
        (&mut lo[dst], &hi[0])
    } else {
        let (lo, hi) = m.split_at_mut(dst);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in a.iter_mut().zip(b.iter()) {
        *x -= q * y;
    }
}

fn negate_row(m: &mut IntMatrix, r: usize) {
    for x in m[r].iter_mut() {
        *x = -&*x;
    }
}

/// Returns `(H, U)` with `U` unimodular and `U * m = H` in Hermite normal
/// form: echelon shape, positive pivots, entries above each pivot reduced
/// into `[0, pivot)`, zero rows last. `H` depends only on the row lattice of
/// `m`, so `hnf(V m).0 == hnf(m).0` for every unimodular `V`.
pub fn hermite_normal_form(m: &[Vec<BigInt>]) -> (IntMatrix, IntMatrix) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut h: IntMatrix = m.to_vec();
    let mut u = identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        loop {
            // Smallest nonzero entry in column c at or below row r becomes the pivot.
            let Some(p) = (r..rows)
                .filter(|&i| !h[i][c].is_zero())
                .min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()))
            else {
                break;
            };
            h.swap(p, r);
            u.swap(p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                sub_row(&mut h, i, r, &q);
                sub_row(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            negate_row(&mut h, r);
            negate_row(&mut u, r);
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            sub_row(&mut h, i, r, &q);
            sub_row(&mut u, i, r, &q);
        }
        r += 1;
    }
    (h, u)
}
