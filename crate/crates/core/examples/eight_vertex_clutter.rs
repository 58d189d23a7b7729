//! A uniform clutter whose edge vectors form a Hilbert basis although
//! both rounding properties fail.

use irp::combinatorics::families;
use irp::polyhedra::{dilation_lattice_points, hilbert_basis, ConeGens};
use irp::rounding::{ehrhart_equality, irp_geq, irp_leq, irp_witness_search, Direction};
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    let c = families::four_edge_clutter_on_eight_vertices();
    let edge_cone = ConeGens::lifted(&c.columns(), 1)?;
    let hb = hilbert_basis(&edge_cone, &budget)?;
    println!("edge cone Hilbert basis: {} elements (the {} edges)", hb.elements.len(), c.q());
    let once = dilation_lattice_points(&c.columns(), 1, &budget)?;
    println!("lattice points of the edge polytope: {}", once.len());
    let e = ehrhart_equality(&c, c.n() as i64 + 1, &budget)?;
    println!("dilations are sums of edges up to b = {}: {}", e.b_max, e.equal_up_to_b);
    println!("<= holds: {}", irp_leq(&c, &budget)?.holds);
    println!(">= holds: {}", irp_geq(&c, &budget)?.holds);
    let a = c.incidence_matrix();
    for dir in [Direction::Leq, Direction::Geq] {
        if let Some(w) = irp_witness_search(&a, dir, 2, &budget)? {
            println!(
                "{dir} witness alpha = {:?}: LP {} rounds to {}, integer optimum {}",
                w.alpha, w.lp_value, w.rounded, w.ilp_value
            );
        }
    }
    Ok(())
}
