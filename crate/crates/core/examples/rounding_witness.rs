//! Searches small right-hand sides for a rounding violation on the clutter
//! of four triples on six vertices, and compares the LP and integer optima
//! for one fixed right-hand side.

use irp::combinatorics::Clutter;
use irp::rounding::{default_window, irp_witness_search, optimum_pair, Direction};
use irp::Budget;

fn main() -> irp::Result<()> {
    let budget = Budget::from_env();
    let c = Clutter::new(6, vec![vec![0, 2, 5], vec![1, 2, 4], vec![0, 3, 4], vec![1, 3, 5]])?;
    let a = c.incidence_matrix();
    let pair = optimum_pair(&a, Direction::Leq, &[1; 6], &budget)?.expect("bounded covering program");
    println!("cover all ones: LP {} at {}, integer {} at {:?}", pair.lp_value, pair.lp_point, pair.ilp_value, pair.ilp_point);
    let window = default_window(&a);
    for dir in [Direction::Leq, Direction::Geq] {
        match irp_witness_search(&a, dir, window, &budget)? {
            Some(w) => println!(
                "{dir}: alpha = {:?}, LP {} rounds to {} but the integer optimum is {}",
                w.alpha, w.lp_value, w.rounded, w.ilp_value
            ),
            None => println!("{dir}: no violation with entries up to {window}"),
        }
    }
    Ok(())
}
