//! Hilbert bases of the cones attached to small graphs, with a normality
//! test that reports a lattice point outside the semigroup when one exists.

use irp::combinatorics::families;
use irp::graph_algebra::{edge_cone_generators, extended_rees_generators, rees_cone_generators};
use irp::polyhedra::{hilbert_basis, is_normal_semigroup, ConeGens};
use irp::Budget;

fn show(label: &str, gens: &ConeGens, budget: &Budget) -> irp::Result<()> {
    let hb = hilbert_basis(gens, budget)?;
    let normal = is_normal_semigroup(gens, budget)?;
    println!("{label}: {} generators, Hilbert basis of size {}", gens.len(), hb.elements.len());
    match normal.witness {
        Some(w) => println!("  not normal, missing {w:?}"),
        None => println!("  normal"),
    }
    Ok(())
}

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    let k3 = families::complete(3);
    show("edge cone of K_3", &edge_cone_generators(&k3)?, &budget)?;
    show("Rees cone of K_3", &rees_cone_generators(&k3)?, &budget)?;
    let g = families::two_triangles_with_path();
    show("edge cone of two triangles joined by a path", &edge_cone_generators(&g)?, &budget)?;
    show("extended Rees cone of the same graph", &extended_rees_generators(&g)?, &budget)?;
    Ok(())
}
