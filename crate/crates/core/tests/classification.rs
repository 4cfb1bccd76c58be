//! Cross-checks of the enumerated reflexive polygons against facts that do
//! not depend on the enumeration: the vertex/boundary-point table of the 16
//! classes, closure under duality and `b(P) + b(P*) = 12`.

mod common;

use ehrhart::corpus::{enumerate_fano_2d, reflexive_polygons};
use ehrhart::lattice::{dual_polytope, interior_lattice_points, normal_form};
use ehrhart::VPolytope;

fn int_vertices(p: &VPolytope) -> Vec<Vec<i64>> {
    p.vertices()
        .iter()
        .map(|v| {
            v.coords()
                .iter()
                .map(|c| c.to_integer().try_into().unwrap())
                .collect()
        })
        .collect()
}

fn boundary(p: &VPolytope) -> i64 {
    common::boundary_points_2d(&int_vertices(p))
}

#[rustfmt::skip]
#[test]
fn vertex_and_boundary_table() {
    let mut table: Vec<(usize, i64)> = reflexive_polygons(3).iter().map(|p| (p.num_vertices(), boundary(p))).collect();
    table.sort();
    // 5 triangles, 7 quadrilaterals, 3 pentagons, 1 hexagon.
    let expected = vec![
        (3, 3), (3, 4), (3, 6), (3, 8), (3, 9),
        (4, 4), (4, 4), (4, 5), (4, 6), (4, 7), (4, 8), (4, 8),
        (5, 5), (5, 6), (5, 7),
        (6, 6),
    ];
    assert_eq!(table, expected);
}

#[test]
fn closed_under_duality_with_twelve() {
    let polygons = reflexive_polygons(3);
    let forms: Vec<_> = polygons.iter().map(|p| normal_form(p).unwrap()).collect();
    for p in &polygons {
        let d = dual_polytope(p).unwrap();
        assert!(forms.contains(&normal_form(&d).unwrap()));
        assert_eq!(boundary(p) + boundary(&d), 12);
    }
}

#[test]
fn one_interior_point_means_reflexive() {
    // Pick's theorem with one interior point: area = b/2, and every
    // member of the enumeration is reflexive.
    let all = enumerate_fano_2d(3);
    assert_eq!(all.len(), reflexive_polygons(3).len());
    for p in &all {
        assert_eq!(interior_lattice_points(p).len(), 1);
        let (area, _) = common::volume_and_barycenter(
            &int_vertices(p)
                .iter()
                .map(|v| v.iter().map(|&c| common::q(c)).collect())
                .collect::<Vec<_>>(),
        );
        assert_eq!(area, common::qf(boundary(p), 2));
    }
}
