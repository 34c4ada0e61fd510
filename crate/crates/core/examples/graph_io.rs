//! Generators, graph6 and edge-list text, block structure and claw search.
//!
//!     cargo run --example graph_io

use cind::families::{diamond_necklace, random_clawfree_cubic, Fixture};
use cind::graph::io::{emit_edgelist, emit_graph6, parse_graph6};
use cind::graph::{biconnected_decomposition, find_isomorphism, girth};

fn main() {
    let (necklace, layout) = diamond_necklace(3).unwrap();
    let text = emit_graph6(&necklace);
    println!("N_3 as graph6: {text}");
    println!("N_3 triangle set: {:?}", layout.triangle_set());
    let back = parse_graph6(&text).unwrap();
    println!(
        "round trip isomorphic: {}",
        find_isomorphism(&necklace, &back).is_some()
    );

    print!(
        "prism as edge list:\n{}",
        emit_edgelist(&Fixture::Prism.graph())
    );

    let g = random_clawfree_cubic(4, 2, 11).unwrap();
    println!(
        "random claw-free cubic: n = {}, girth {:?}, claw {:?}",
        g.order(),
        girth(&g),
        g.find_claw()
    );
    let k33 = Fixture::CompleteBipartite(3).graph();
    println!("K_3,3 claw: {:?}", k33.find_claw());

    let tower = Fixture::Tower.graph().to_multigraph();
    let blocks = biconnected_decomposition(&tower);
    println!(
        "tower: {} blocks, cut vertices {:?}, bridges {:?}",
        blocks.blocks.len(),
        blocks.cut_vertices,
        blocks.bridges
    );
}
