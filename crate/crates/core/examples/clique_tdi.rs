//! On the clique matrix of a perfect graph, the covering LP has integral
//! optima for every integral right-hand side. Tries every `alpha` in
//! `{0,1,2}^n` on a few graphs.

use irp::combinatorics::families;
use irp::graph_algebra::tdi_check;
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    for (name, g) in [("C_4", families::cycle(4)), ("P_5", families::path(5)), ("K_2,3", families::complete_bipartite(2, 3))] {
        let n = g.n();
        let mut checked = 0;
        let mut largest = 0;
        for code in 0..3usize.pow(n as u32) {
            let alpha: Vec<i64> = (0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as i64).collect();
            let t = tdi_check(&g, &alpha, &budget)?;
            assert!(t.holds, "fractional optimum {} for {alpha:?}", t.lp_value);
            largest = largest.max(t.ilp_value);
            checked += 1;
        }
        println!("{name}: {checked} right-hand sides, all integral, largest optimum {largest}");
    }
    println!("C_5 is rejected: {:?}", tdi_check(&families::cycle(5), &[1; 5], &budget).err());
    Ok(())
}
