//! Perfect matchings through and around every edge of a 2-connected cubic
//! multigraph, and the diamond gadget that removes a parallel pair.
//!
//!     cargo run --release --example matching_extendability [n] [seed]

use cind::families::random_biconnected_cubic_multigraph;
use cind::matching::{
    diamond_gadget_substitute, perfect_matching_avoiding, perfect_matching_containing,
    tutte_violator,
};
use cind::Multigraph;

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse::<u64>().ok());
    let n = args.next().unwrap_or(10) as usize;
    let seed = args.next().unwrap_or(4);
    let g = random_biconnected_cubic_multigraph(n, seed).unwrap();
    println!(
        "{} vertices, {} edges, parallel edges: {}",
        g.order(),
        g.size(),
        g.has_parallel_edges()
    );
    for (id, u, v) in g.edges() {
        let with = perfect_matching_containing(&g, id)
            .unwrap()
            .expect("1-extendable");
        let without = perfect_matching_avoiding(&g, id).unwrap();
        println!(
            "edge {id:>2} ({u},{v}): with {:?}  without {:?}",
            with.edges(),
            without.map(|m| m.edges().to_vec())
        );
    }

    if let Some(e) = g.edge_ids().find(|&e| !g.parallel_edges(e).is_empty()) {
        let (h, map) = diamond_gadget_substitute(&g, e).unwrap();
        let m = perfect_matching_containing(&h, map.e1).unwrap().unwrap();
        println!(
            "gadget on edge {e}: {} vertices; lifted matching {:?}",
            h.order(),
            map.to_original(&m).edges()
        );
    }

    // removing the center of a claw leaves three odd components
    let claw = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
    println!(
        "Tutte set of the claw: {:?}",
        tutte_violator(&claw).unwrap()
    );
}
