//! Brute-force reference implementations used to cross-check the library.
//! Nothing here calls into the library's geometry.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross3(a: &[Q], b: &[Q]) -> Vec<Q> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn det3(a: &[Q], b: &[Q], c: &[Q]) -> Q {
    dot(a, &cross3(b, c))
}

fn cross2(a: &[Q], b: &[Q]) -> Q {
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn centroid(points: &[Vec<Q>]) -> Vec<Q> {
    let n = q(points.len() as i64);
    (0..points[0].len())
        .map(|i| points.iter().map(|p| p[i].clone()).sum::<Q>() / &n)
        .collect()
}

/// Orders coplanar points counter-clockwise around their centroid, seen from
/// the side `normal` points to (in 2D pass `None`).
fn angular_order(points: &[Vec<Q>], normal: Option<&[Q]>) -> Vec<Vec<Q>> {
    let c = centroid(points);
    let turn = |a: &[Q], b: &[Q]| -> Q {
        match normal {
            None => cross2(a, b),
            Some(n) => dot(n, &cross3(a, b)),
        }
    };
    let r = sub(&points[0], &c);
    let upper = |d: &[Q]| {
        let t = turn(&r, d);
        t.is_positive() || (t.is_zero() && dot(&r, d).is_positive())
    };
    let mut sorted = points.to_vec();
    sorted.sort_by(|a, b| {
        let (da, db) = (sub(a, &c), sub(b, &c));
        upper(&db)
            .cmp(&upper(&da))
            .then_with(|| Q::zero().cmp(&turn(&da, &db)))
    });
    sorted
}

/// Outer facet inequalities `<n, x> <= c` of the hull of `points` (dim 2 or
/// 3) by testing every line/plane through 2 or 3 points; each facet is
/// returned with the input points lying on it.
pub fn facets(points: &[Vec<Q>]) -> Vec<(Vec<Q>, Q, Vec<Vec<Q>>)> {
    let dim = points[0].len();
    let mut out: Vec<(Vec<Q>, Q, Vec<Vec<Q>>)> = Vec::new();
    let mut consider = |normal: Vec<Q>, base: &[Q]| {
        if normal.iter().all(Zero::is_zero) {
            return;
        }
        let c = dot(&normal, base);
        let sides: Vec<Ordering> = points.iter().map(|p| dot(&normal, p).cmp(&c)).collect();
        let normal = if sides.iter().all(|s| *s != Ordering::Greater) {
            normal
        } else if sides.iter().all(|s| *s != Ordering::Less) {
            normal.iter().map(|x| -x).collect()
        } else {
            return;
        };
        let c = dot(&normal, base);
        let on: Vec<Vec<Q>> = points
            .iter()
            .filter(|p| dot(&normal, p) == c)
            .cloned()
            .collect();
        if on.len() < dim || out.iter().any(|(_, _, o)| *o == on) {
            return;
        }
        out.push((normal, c, on));
    };
    let m = points.len();
    for i in 0..m {
        for j in i + 1..m {
            if dim == 2 {
                let d = sub(&points[j], &points[i]);
                consider(vec![d[1].clone(), -d[0].clone()], &points[i]);
            } else {
                for k in j + 1..m {
                    let n = cross3(&sub(&points[j], &points[i]), &sub(&points[k], &points[i]));
                    consider(n, &points[i]);
                }
            }
        }
    }
    out
}

/// Exact volume and barycenter of the hull of `points` in dimension 2 or 3.
pub fn volume_and_barycenter(points: &[Vec<Q>]) -> (Q, Vec<Q>) {
    let dim = points[0].len();
    let fs = facets(points);
    let mut vol = Q::zero();
    let mut moment = vec![Q::zero(); dim];
    if dim == 2 {
        // Shoelace over the boundary in angular order.
        let on_boundary: Vec<Vec<Q>> = {
            let mut v: Vec<Vec<Q>> = fs.iter().flat_map(|(_, _, on)| on.clone()).collect();
            v.sort();
            v.dedup();
            v
        };
        let ring = angular_order(&on_boundary, None);
        for i in 0..ring.len() {
            let (a, b) = (&ring[i], &ring[(i + 1) % ring.len()]);
            let w = cross2(a, b);
            for k in 0..2 {
                moment[k] += &w * (&a[k] + &b[k]);
            }
            vol += w;
        }
        let area = &vol / q(2);
        let bary = moment.iter().map(|m| m / (q(6) * &area)).collect();
        return (area, bary);
    }
    // Dimension 3: cone from an interior point over fan-triangulated facets.
    let o = centroid(points);
    for (normal, _, on) in &fs {
        let ring = angular_order(on, Some(normal));
        for i in 1..ring.len() - 1 {
            let (a, b, c) = (&ring[0], &ring[i], &ring[i + 1]);
            let v = det3(&sub(a, &o), &sub(b, &o), &sub(c, &o)).abs() / q(6);
            for k in 0..3 {
                moment[k] += &v * (&o[k] + &a[k] + &b[k] + &c[k]) / q(4);
            }
            vol += v;
        }
    }
    let bary = moment.iter().map(|m| m / &vol).collect();
    (vol, bary)
}

/// The input points that are vertices of their hull.
pub fn vertices(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let dim = points[0].len();
    let fs = facets(points);
    let mut out: Vec<Vec<Q>> = points
        .iter()
        .filter(|p| {
            // A vertex is on at least `dim` facets with independent normals;
            // in dim 2 and 3 for a hull this is "not in the relative interior
            // of a facet or an edge", tested by facet incidence count.
            let incident: Vec<&Vec<Q>> = fs
                .iter()
                .filter(|(n, c, _)| dot(n, p) == *c)
                .map(|(n, _, _)| n)
                .collect();
            match dim {
                2 => incident.len() >= 2,
                _ => {
                    incident.len() >= 3
                        && (0..incident.len()).any(|i| {
                            (i + 1..incident.len()).any(|j| {
                                (j + 1..incident.len())
                                    .any(|k| !det3(incident[i], incident[j], incident[k]).is_zero())
                            })
                        })
                }
            }
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Integer points of the hull, scanning the bounding box.
pub fn lattice_points(points: &[Vec<Q>], strict: bool) -> Vec<Vec<i64>> {
    let dim = points[0].len();
    let fs = facets(points);
    let lo: Vec<i64> = (0..dim)
        .map(|i| {
            points
                .iter()
                .map(|p| p[i].floor().to_integer())
                .min()
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    let hi: Vec<i64> = (0..dim)
        .map(|i| {
            points
                .iter()
                .map(|p| p[i].ceil().to_integer())
                .max()
                .unwrap()
                .try_into()
                .unwrap()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let x: Vec<Q> = cur.iter().map(|&c| q(c)).collect();
        let inside = fs.iter().all(|(n, c, _)| {
            let v = dot(n, &x);
            if strict {
                v < *c
            } else {
                v <= *c
            }
        });
        if inside {
            out.push(cur.clone());
        }
        let mut i = dim;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                    *c = lo[j];
                }
                break;
            }
        }
    }
}

/// Vertices of the polar dual `{x : <v, x> >= -1}` of a polygon containing
/// the origin in its interior: each edge `<n, x> <= c` gives `-n/c`.
pub fn dual_vertices_2d(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = facets(points)
        .into_iter()
        .map(|(n, c, _)| n.iter().map(|x| -x / &c).collect())
        .collect();
    out.sort();
    out
}

/// Number of lattice points on the boundary of a lattice polygon.
pub fn boundary_points_2d(vertices: &[Vec<i64>]) -> i64 {
    let pts: Vec<Vec<Q>> = vertices
        .iter()
        .map(|v| v.iter().map(|&c| q(c)).collect())
        .collect();
    let ring = angular_order(&pts, None);
    let gcd = |a: i64, b: i64| -> i64 {
        let (mut a, mut b) = (a.abs(), b.abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    (0..ring.len())
        .map(|i| {
            let d = sub(&ring[(i + 1) % ring.len()], &ring[i]);
            let dx: i64 = d[0].to_integer().try_into().unwrap();
            let dy: i64 = d[1].to_integer().try_into().unwrap();
            gcd(dx, dy)
        })
        .sum()
}

pub fn to_q(rows: &[&[i64]]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&c| q(c)).collect())
        .collect()
}
