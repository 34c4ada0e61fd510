//! The constructive algorithm on random claw-free cubic graphs: surgeries,
//! base cases and per-piece ledgers.
//!
//!     cargo run --release --example clawfree_construction [t] [d] [towers] [seed]

use cind::clawfree::{construct_large_two_regular, threshold};
use cind::families::random_clawfree_cubic_with_towers;

fn main() {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse().ok())
        .collect();
    let arg = |i: usize, d: u64| args.get(i).copied().unwrap_or(d);
    let (t, d, towers, seed) = (
        arg(0, 12) as usize,
        arg(1, 4) as usize,
        arg(2, 1) as usize,
        arg(3, 3),
    );
    let g = random_clawfree_cubic_with_towers(t, d, towers, seed).expect("generator");
    let res = construct_large_two_regular(&g).expect("claw-free cubic input");
    res.certificate.verify(&g).unwrap();
    println!(
        "n = {}, |S| = {}, floor(13n/20)+1 = {}",
        g.order(),
        res.size(),
        threshold(g.order())
    );
    for c in &res.components {
        println!(
            "component of order {}: surgeries {:?}",
            c.order, c.surgeries
        );
        if let Some(kind) = c.terminal {
            println!("  ended in base case {kind:?}");
        }
        for p in &c.pieces {
            println!("  {:?} weight {} covered {}", p.piece, p.weight, p.covered);
            if let Some(l) = &p.ledger {
                println!("    {l}");
            }
        }
    }
    for cycle in res.certificate.cycles() {
        println!("cycle {cycle:?}");
    }
}
