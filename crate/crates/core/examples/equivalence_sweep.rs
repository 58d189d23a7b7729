//! Runs the six-condition equivalence check on random connected graphs and
//! reports how often each condition holds.
//!
//! Usage: `cargo run --release --example equivalence_sweep -- [n] [count] [seed]`

use std::time::Instant;

use irp::combinatorics::Graph;
use irp::graph_algebra::equivalence_suite;
use irp::Budget;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn main() -> irp::Result<()> {
    let args: Vec<u64> = std::env::args().skip(1).map(|a| a.parse().expect("numeric argument")).collect();
    let n = *args.first().unwrap_or(&7) as usize;
    let count = *args.get(1).unwrap_or(&20);
    let mut rng = ChaCha8Rng::seed_from_u64(*args.get(2).unwrap_or(&1));
    let budget = Budget::from_env();
    let mut holds = 0;
    let mut slowest = (0.0f64, Vec::new());
    let start = Instant::now();
    let mut done = 0;
    while done < count {
        let p: f64 = rng.gen_range(0.2..0.9);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(p) {
                    edges.push((i, j));
                }
            }
        }
        let g = Graph::new(n, &edges)?;
        if !g.is_connected() {
            continue;
        }
        let t = Instant::now();
        let report = equivalence_suite(&g, &budget)?;
        let secs = t.elapsed().as_secs_f64();
        if secs > slowest.0 {
            slowest = (secs, edges);
        }
        assert!(report.consistent, "inconsistent verdicts on {:?}", g.edges());
        holds += usize::from(report.verdicts()[0]);
        done += 1;
    }
    println!("{done} graphs on {n} vertices, all consistent; {holds} satisfy the conditions");
    println!("total {:.2}s, slowest {:.3}s on {:?}", start.elapsed().as_secs_f64(), slowest.0, slowest.1);
    Ok(())
}
