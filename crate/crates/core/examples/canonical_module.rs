//! Minimal generators of the canonical module of the closure subring, and
//! its a-invariant computed three ways.

use irp::canonical::{
    a_invariant_direct, a_invariant_formula, canonical_generators, canonical_presentation, default_b_max,
    is_gorenstein, perfect_presentation,
};
use irp::combinatorics::families;
use irp::polyhedra::{polytope_vertices, Cone};
use irp::rounding::closure_cone;
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    for (name, g) in [
        ("K_2", families::complete(2)),
        ("P_3", families::path(3)),
        ("C_4", families::cycle(4)),
        ("K_3", families::complete(3)),
        ("C_5", families::cycle(5)),
    ] {
        let c = g.to_clutter()?;
        let vertices = polytope_vertices(&c.incidence_matrix(), &budget)?;
        let pres = canonical_presentation(&vertices)?;
        let gens_cone = closure_cone(&c)?;
        let gens = canonical_generators(&pres, &gens_cone, default_b_max(&pres), &budget)?;
        let formula = a_invariant_formula(&vertices)?;
        let direct = a_invariant_direct(&Cone::new(&gens_cone, &budget)?, &budget)?;
        println!("{name}: a = {formula} (direct {direct}), Gorenstein {}", is_gorenstein(&gens).gorenstein);
        for t in &gens.generators {
            println!("  generator {:?} at degree {}", t.a, t.b);
        }
        if let Ok(p) = perfect_presentation(&g, &budget) {
            println!("  over independent sets: a = {}", p.a_invariant);
        }
    }
    Ok(())
}
