//! Checking vertex sets and reading the cycle decomposition.
//!
//!     cargo run --example verify_certificate

use cind::exact::{max_induced_two_regular, SearchBudget};
use cind::families::Fixture;
use cind::is_two_regular_induced;

fn main() {
    let g = Fixture::HalfCubic.graph();
    let best = max_induced_two_regular(&g, SearchBudget::unlimited()).certificate;
    let mut extra = best.vertices().to_vec();
    extra.push((0..g.order()).find(|v| !best.contains(*v)).unwrap());
    for set in [
        best.vertices().to_vec(),
        extra,
        best.vertices()[1..].to_vec(),
    ] {
        match is_two_regular_induced(&g, &set) {
            Ok(cert) => println!("{set:?}: cycles {:?}", cert.cycles()),
            Err(e) => println!("{set:?}: {e}"),
        }
    }
    println!("serialized: {}", serde_json::to_string(&best).unwrap());
}
