//! Runs the seeded check suites from library code.
//!
//!     cargo run --release --example check_suites [seed]

use cind::bench::{run_suites, Suite};

fn main() {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(7);
    for r in run_suites(&Suite::ALL, seed) {
        println!("{r}");
    }
}
