//! Greedy shortest-cycle deletion against its exact lower bound on random
//! graphs, plus the n/4 guarantee on cubic graphs.
//!
//!     cargo run --release --example greedy_bound [seed]

use cind::families::{random_cubic_graph, random_graph};
use cind::greedy::{bound_for, greedy_two_regular, regular_bound};

fn main() {
    let seed: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(1);
    println!(
        "{:>4} {:>5} {:>4} {:>9} {:>6}",
        "n", "m", "Δ", "bound", "greedy"
    );
    for i in 0..8 {
        let g = random_graph(12 + 4 * i, 0.25, seed + i as u64).unwrap();
        let Ok(bound) = bound_for(&g) else { continue };
        let (cert, trace) = greedy_two_regular(&g);
        println!(
            "{:>4} {:>5} {:>4} {:>9} {:>6}   {} steps, {} left acyclic",
            g.order(),
            g.size(),
            g.max_degree(),
            bound.to_string(),
            cert.size(),
            trace.steps.len(),
            trace.residual.len()
        );
    }
    println!();
    for n in [20, 50, 100, 200] {
        let g = random_cubic_graph(n, seed).unwrap();
        let (cert, _) = greedy_two_regular(&g);
        println!(
            "cubic n={n:<4} greedy {:>3}  n/4 = {:<5}  regular bound {}",
            cert.size(),
            n as f64 / 4.0,
            regular_bound(n, 3).unwrap()
        );
    }
}
