use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_integer::Integer;

use crate::kernel::{Point, VPolytope};
use crate::lattice::{is_reflexive, normal_form, NormalForm};

type V = (i64, i64);

fn cross(a: V, b: V) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

fn sub(a: V, b: V) -> V {
    (a.0 - b.0, a.1 - b.1)
}

/// Counter-clockwise angular order starting at the positive x-axis.
fn angular_cmp(a: V, b: V) -> Ordering {
    let upper = |v: V| v.1 > 0 || (v.1 == 0 && v.0 > 0);
    upper(b).cmp(&upper(a)).then_with(|| 0.cmp(&cross(a, b)))
}

/// Whether the triangle `conv(0, u, w)` has no lattice points besides its
/// vertices and those on the edge `uw` (Pick, with `u`, `w` primitive).
fn empty_fan_triangle(u: V, w: V) -> bool {
    let d = sub(w, u);
    cross(u, w) == d.0.gcd(&d.1)
}

struct Search<'a> {
    candidates: &'a [V],
    cycle: Vec<usize>,
    found: Vec<Vec<V>>,
}

impl Search<'_> {
    fn extend(&mut self) {
        let first = self.candidates[self.cycle[0]];
        let last_idx = *self.cycle.last().unwrap();
        let last = self.candidates[last_idx];
        let turns_left = |a: V, b: V, c: V| cross(sub(b, a), sub(c, b)) > 0;
        let prev =
            (self.cycle.len() >= 2).then(|| self.candidates[self.cycle[self.cycle.len() - 2]]);

        // Close the cycle.
        if self.cycle.len() >= 3
            && cross(last, first) > 0
            && empty_fan_triangle(last, first)
            && prev.is_none_or(|p| turns_left(p, last, first))
            && turns_left(last, first, self.candidates[self.cycle[1]])
        {
            self.found
                .push(self.cycle.iter().map(|&i| self.candidates[i]).collect());
        }
        for next in last_idx + 1..self.candidates.len() {
            let w = self.candidates[next];
            if cross(last, w) <= 0 {
                break;
            }
            if empty_fan_triangle(last, w) && prev.is_none_or(|p| turns_left(p, last, w)) {
                self.cycle.push(next);
                self.extend();
                self.cycle.pop();
            }
        }
    }
}

/// Lattice polygons with vertices in `[-bound, bound]^2` whose only interior
/// lattice point is the origin, one per unimodular class, ordered by normal
/// form. Each class is represented by the first such polygon met in the
/// search, so the origin stays its interior point.
pub fn enumerate_fano_2d(bound: i64) -> Vec<VPolytope> {
    // Vertices of such polygons are primitive: a vertex k·p with k > 1 would
    // put p in the interior.
    let mut candidates: Vec<V> = (-bound..=bound)
        .flat_map(|x| (-bound..=bound).map(move |y| (x, y)))
        .filter(|&(x, y)| x.gcd(&y) == 1)
        .collect();
    candidates.sort_by(|&a, &b| angular_cmp(a, b));

    let mut search = Search {
        candidates: &candidates,
        cycle: Vec::new(),
        found: Vec::new(),
    };
    for start in 0..candidates.len() {
        search.cycle.push(start);
        search.extend();
        search.cycle.pop();
    }

    let mut classes: BTreeMap<NormalForm, VPolytope> = BTreeMap::new();
    for polygon in search.found {
        let p = VPolytope::from_points(
            polygon
                .iter()
                .map(|&(x, y)| Point::from_ints(&[x, y]))
                .collect(),
        )
        .expect("polygon around the origin is full-dimensional");
        let nf = normal_form(&p).expect("dimension 2 is supported");
        classes.entry(nf).or_insert(p);
    }
    classes.into_values().collect()
}

/// The reflexive members of [`enumerate_fano_2d`].
pub fn reflexive_polygons(bound: i64) -> Vec<VPolytope> {
    enumerate_fano_2d(bound)
        .into_iter()
        .filter(|p| is_reflexive(p).unwrap_or(false))
        .collect()
}
