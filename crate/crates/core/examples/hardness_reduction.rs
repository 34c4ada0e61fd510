//! Independent sets of a cubic graph become induced 2-regular subgraphs of
//! a max-degree-4 graph, and back.
//!
//!     cargo run --release --example hardness_reduction

use cind::families::Fixture;
use cind::hardness::{embed_independent_set, extract_independent_set, reduce_independent_set};

fn main() {
    let g = Fixture::Prism.graph();
    let map = reduce_independent_set(&g).unwrap();
    let h = &map.target;
    println!(
        "source n = {}, gadget n = {}, max degree {}",
        g.order(),
        h.order(),
        h.max_degree()
    );
    for (v, e) in map.chosen_edges.iter().enumerate() {
        println!(
            "vertex {v}: subdivides {e:?}, cycle length {}",
            map.cycles[v].len()
        );
    }
    for set in [vec![0, 4], vec![2], vec![0, 1]] {
        match embed_independent_set(&map, &set) {
            Ok(cert) => println!(
                "I = {set:?}: |S| = {} = 3|I|n, back to {:?}",
                cert.size(),
                extract_independent_set(&map, &cert)
            ),
            Err(e) => println!("I = {set:?}: {e}"),
        }
    }
}
