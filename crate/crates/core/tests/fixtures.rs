use std::collections::BTreeSet;

use irp::combinatorics::families;
use irp::graph_algebra::extended_rees_generators;
use irp::polyhedra::{dilation_lattice_points, hilbert_basis, is_normal_semigroup, ConeGens};
use irp::rounding::{closure_cone, ehrhart_equality};
use irp::Budget;

fn set(v: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    v.iter().cloned().collect()
}

#[test]
fn eight_vertex_clutter() {
    let b = Budget::default();
    let c = families::four_edge_clutter_on_eight_vertices();
    let edge_cone = ConeGens::lifted(&c.columns(), 1).unwrap();
    let hb = hilbert_basis(&edge_cone, &b).unwrap();
    assert_eq!(set(&hb.elements), set(edge_cone.generators()));
    assert_eq!(set(&dilation_lattice_points(&c.columns(), 1, &b).unwrap()), set(&c.columns()));
    assert!(ehrhart_equality(&c, 9, &b).unwrap().equal_up_to_b);
    let closure = is_normal_semigroup(&closure_cone(&c).unwrap(), &b).unwrap();
    assert!(!closure.normal);
    assert!(closure.witness.is_some());
}

#[test]
fn closure_basis_of_an_edge() {
    let b = Budget::default();
    let cone = closure_cone(&families::complete(2).to_clutter().unwrap()).unwrap();
    assert_eq!(set(&hilbert_basis(&cone, &b).unwrap().elements), set(cone.generators()));
}

#[test]
fn extended_rees_of_two_triangles_joined_by_a_path() {
    let b = Budget::default();
    let gens = extended_rees_generators(&families::two_triangles_with_path()).unwrap();
    let n = is_normal_semigroup(&gens, &b).unwrap();
    assert!(!n.normal);
    assert!(n.witness.is_some());
    let hb = set(&hilbert_basis(&gens, &b).unwrap().elements);
    assert!(hb.is_superset(&set(gens.generators())));
    assert!(hb.len() > gens.len());
}
