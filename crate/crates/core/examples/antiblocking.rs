//! Checks that the vertices of the closure polytope of a clutter describe
//! the antiblocker of its polytope, for clique clutters of perfect graphs
//! and for an edge clutter.

use irp::canonical::antiblocker_check;
use irp::combinatorics::families;
use irp::polyhedra::polytope_vertices;
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    for (name, g) in [
        ("C_4", families::cycle(4)),
        ("K_4", families::complete(4)),
        ("P_5", families::path(5)),
        ("complement of C_6", families::cycle(6).complement()),
    ] {
        let c = g.clique_clutter();
        let v = polytope_vertices(&c.incidence_matrix(), &budget)?;
        println!("{name}: {} maximal cliques, {} vertices, duality {}", c.q(), v.len(), antiblocker_check(&c, &v, &budget)?);
    }
    let c5 = families::cycle(5).to_clutter()?;
    let v = polytope_vertices(&c5.incidence_matrix(), &budget)?;
    println!("edges of C_5: {} vertices, duality {}", v.len(), antiblocker_check(&c5, &v, &budget)?);
    Ok(())
}
