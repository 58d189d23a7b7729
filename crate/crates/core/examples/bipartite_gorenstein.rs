//! For connected bipartite graphs, compares the Gorenstein property of the
//! closure subring with unmixedness of the edge ideal.

use irp::canonical::{canonical_generators, is_gorenstein, perfect_presentation};
use irp::combinatorics::families;
use irp::rounding::closure_cone;
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    for (name, g) in [
        ("P_2", families::path(2)),
        ("P_4", families::path(4)),
        ("C_4", families::cycle(4)),
        ("C_6", families::cycle(6)),
        ("K_2,3", families::complete_bipartite(2, 3)),
        ("K_3,3", families::complete_bipartite(3, 3)),
        ("star on 3 leaves", families::star(3)),
    ] {
        let p = perfect_presentation(&g, &budget)?;
        let cone = closure_cone(&g.to_clutter()?)?;
        let gens = canonical_generators(&p.pres, &cone, g.n() as i64 + 1, &budget)?;
        let gor = is_gorenstein(&gens);
        println!(
            "{name}: unmixed {}, Gorenstein {} ({} generators, a = {})",
            g.is_unmixed(),
            gor.gorenstein,
            gens.generators.len(),
            p.a_invariant
        );
    }
    Ok(())
}
