//! Exact induced cycle numbers of the named fixtures, checked against the
//! brute-force oracle where it fits.
//!
//!     cargo run --release --example exact_solver

use cind::exact::{brute_force_oracle, max_induced_two_regular, SearchBudget};
use cind::families::{diamond_necklace, Fixture};

fn main() {
    let mut graphs: Vec<(String, cind::Graph)> = Fixture::NAMED
        .iter()
        .map(|f| (f.to_string(), f.graph()))
        .collect();
    graphs.push(("k44".into(), Fixture::CompleteBipartite(4).graph()));
    for k in 2..=4 {
        graphs.push((format!("necklace {k}"), diamond_necklace(k).unwrap().0));
    }
    println!(
        "{:<18} {:>3} {:>6} {:>8} {:>9}  cycles",
        "graph", "n", "c_ind", "oracle", "nodes"
    );
    for (name, g) in graphs {
        let res = max_induced_two_regular(&g, SearchBudget::new(None, Some(30.0)).unwrap());
        res.certificate.verify(&g).expect("certificate holds");
        let oracle = brute_force_oracle(&g).map_or("-".to_string(), |s| s.to_string());
        let lens: Vec<usize> = res.certificate.cycles().iter().map(Vec::len).collect();
        println!(
            "{:<18} {:>3} {:>5}{} {:>8} {:>9}  {:?}",
            name,
            g.order(),
            res.size(),
            if res.optimal { " " } else { "?" },
            oracle,
            res.nodes_explored,
            lens
        );
    }
}
