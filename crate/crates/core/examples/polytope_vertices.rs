//! Vertices of `{x >= 0 : xA <= 1}` for the incidence matrices of a few
//! graphs. Odd cycles contribute the half-integral point.

use irp::combinatorics::families;
use irp::polyhedra::polytope_vertices;
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    for (name, g) in [
        ("K_3", families::complete(3)),
        ("C_4", families::cycle(4)),
        ("C_5", families::cycle(5)),
        ("K_4", families::complete(4)),
    ] {
        let a = g.to_clutter()?.incidence_matrix();
        let v = polytope_vertices(&a, &budget)?;
        let fractional = v.vertices.iter().filter(|x| !x.is_integral()).count();
        println!("{name}: {} vertices, {fractional} fractional", v.len());
        for x in v.nonzero().filter(|x| !x.is_integral()) {
            println!("  {x}");
        }
    }
    Ok(())
}
