//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};

use cind::bench::Suite;

const SEED: u64 = 7;

fn determinism() -> (bool, String) {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cind"))
            .args(["bench", "--suite", "all", "--seed", "7"])
            .env_remove("CIND_SEED")
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    let same = a.stdout == b.stdout;
    let ok = same && a.status.success() && b.status.success() && !a.stdout.is_empty();
    (
        ok,
        format!("{} bytes, identical: {same}, {}", a.stdout.len(), a.status),
    )
}

fn main() -> ExitCode {
    let mut all = true;
    for suite in Suite::ALL {
        let r = suite.run(SEED);
        all &= r.passed();
        println!("criterion {r}");
    }
    let (ok, detail) = determinism();
    all &= ok;
    println!(
        "criterion  8  determinism {}  {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
