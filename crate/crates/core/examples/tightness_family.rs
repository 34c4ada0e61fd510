//! The graphs G_k of order 20k + 34, where the construction lands exactly
//! on 13k + 23.
//!
//!     cargo run --release --example tightness_family

use cind::clawfree::construct_large_two_regular;
use cind::families::tightness_graph;

fn main() {
    println!(
        "{:>2} {:>5} {:>7} {:>9}  surgeries",
        "k", "n", "|S|", "13k+23"
    );
    for k in 1..=8 {
        let g = tightness_graph(k).unwrap();
        let res = construct_large_two_regular(&g).unwrap();
        res.certificate.verify(&g).unwrap();
        let surgeries: Vec<_> = res
            .components
            .iter()
            .flat_map(|c| c.surgeries.clone())
            .collect();
        println!(
            "{k:>2} {:>5} {:>7} {:>9}  {surgeries:?}",
            g.order(),
            res.size(),
            13 * k + 23
        );
    }
}
