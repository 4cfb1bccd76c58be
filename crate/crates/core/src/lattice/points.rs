use num_bigint::BigInt;
use num_traits::One;

use crate::kernel::{contains, HPolytope, LatticePoint, Point, Rational, VPolytope};

/// Integer points of `p` (interior only when `strict`), sorted lexicographically.
///
/// Scans the integer bounding box of the vertices with exact membership tests.
pub fn lattice_points(p: &HPolytope, strict: bool) -> Vec<LatticePoint> {
    match crate::kernel::h_to_v(p) {
        Ok(v) => scan_box(p, v.vertices(), strict),
        Err(_) => Vec::new(),
    }
}

pub fn lattice_points_of(p: &VPolytope, strict: bool) -> Vec<LatticePoint> {
    scan_box(p.h(), p.vertices(), strict)
}

pub fn interior_lattice_points(p: &VPolytope) -> Vec<LatticePoint> {
    lattice_points_of(p, true)
}

fn scan_box(h: &HPolytope, vertices: &[Point], strict: bool) -> Vec<LatticePoint> {
    let n = h.dim();
    let lo: Vec<BigInt> = (0..n)
        .map(|i| {
            let min: &Rational = vertices
                .iter()
                .map(|v| &v.coords()[i])
                .min()
                .expect("nonempty");
            min.ceil().to_integer()
        })
        .collect();
    let hi: Vec<BigInt> = (0..n)
        .map(|i| {
            let max: &Rational = vertices
                .iter()
                .map(|v| &v.coords()[i])
                .max()
                .expect("nonempty");
            max.floor().to_integer()
        })
        .collect();
    if lo.iter().zip(&hi).any(|(l, h)| l > h) {
        return Vec::new();
    }

    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let candidate = LatticePoint::new(cur.clone());
        if contains(h, &candidate.to_point(), strict) {
            out.push(candidate);
        }
        // Odometer with the last coordinate fastest, giving lexicographic order.
        let mut axis = n;
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            if cur[axis] < hi[axis] {
                cur[axis] += BigInt::one();
                break;
            }
            cur[axis] = lo[axis].clone();
        }
    }
}
