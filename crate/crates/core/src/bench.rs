//! Seeded check suites over the generators and solvers.
//!
//! Each suite samples its inputs from a ChaCha stream derived from the seed,
//! runs one family of checks and reports counts only, so the printed table
//! is a pure function of the seed.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clawfree::{construct_large_two_regular, threshold};
use crate::exact::{brute_force_oracle, max_induced_two_regular, SearchBudget};
use crate::families::{
    diamond_necklace, random_biconnected_cubic_multigraph, random_clawfree_cubic_with_towers,
    random_cubic_graph, random_graph, tightness_graph, Fixture,
};
use crate::graph::{Graph, Multigraph};
use crate::greedy::{bound_for, greedy_two_regular, Rational};
use crate::hardness::{embed_independent_set, extract_independent_set, reduce_independent_set};
use crate::matching::{maximum_matching, perfect_matching_containing, tutte_violator};

/// Failures kept per suite; the count is always exact.
const KEEP: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Fixtures,
    Oracle,
    Greedy,
    ClawFree,
    Tightness,
    Matching,
    Reduction,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Fixtures,
        Suite::Oracle,
        Suite::Greedy,
        Suite::ClawFree,
        Suite::Tightness,
        Suite::Matching,
        Suite::Reduction,
    ];

    pub fn number(self) -> usize {
        Suite::ALL.iter().position(|&s| s == self).unwrap() + 1
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Fixtures => "fixtures",
            Suite::Oracle => "oracle",
            Suite::Greedy => "greedy",
            Suite::ClawFree => "clawfree",
            Suite::Tightness => "tightness",
            Suite::Matching => "matching",
            Suite::Reduction => "reduction",
        }
    }

    pub fn run(self, seed: u64) -> SuiteReport {
        let mut r = SuiteReport::new(self);
        // distinct stream per suite so adding checks to one leaves the rest alone
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (self.number() as u64) << 56);
        match self {
            Suite::Fixtures => fixtures(&mut r),
            Suite::Oracle => oracle(&mut r, &mut rng),
            Suite::Greedy => greedy(&mut r, &mut rng),
            Suite::ClawFree => clawfree(&mut r, &mut rng),
            Suite::Tightness => tightness(&mut r),
            Suite::Matching => matching(&mut r, &mut rng),
            Suite::Reduction => reduction(&mut r, &mut rng),
        }
        r
    }
}

impl FromStr for Suite {
    type Err = String;

    /// By name or by number.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s || x.number().to_string() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite,
            checks: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEEP {
                self.failures.push(what());
            }
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:>2}  {:<10} {}  {}/{} checks",
            self.suite.number(),
            self.suite.name(),
            if self.passed() { "PASS" } else { "FAIL" },
            self.checks - self.failed,
            self.checks
        )?;
        for msg in &self.failures {
            write!(f, "\n      {msg}")?;
        }
        Ok(())
    }
}

fn fixtures(r: &mut SuiteReport) {
    let cases: Vec<(String, Graph, usize)> = vec![
        ("k4".into(), Fixture::K4.graph(), 3),
        ("prism".into(), Fixture::Prism.graph(), 4),
        ("half_cubic".into(), Fixture::HalfCubic.graph(), 6),
        ("two_towers".into(), Fixture::TwoTowers.graph(), 10),
        ("necklace 2".into(), diamond_necklace(2).unwrap().0, 6),
        ("necklace 3".into(), diamond_necklace(3).unwrap().0, 9),
        ("k44".into(), Fixture::CompleteBipartite(4).graph(), 4),
    ];
    for (name, g, want) in cases {
        let res = max_induced_two_regular(&g, SearchBudget::unlimited());
        let ok = res.optimal && res.size() == want && res.certificate.verify(&g).is_ok();
        r.check(ok, || {
            format!(
                "{name}: got {} (optimal {}), want {want}",
                res.size(),
                res.optimal
            )
        });
    }
}

fn oracle(r: &mut SuiteReport, rng: &mut ChaCha8Rng) {
    let compare = |r: &mut SuiteReport, g: &Graph, label: &str| {
        let exact = max_induced_two_regular(g, SearchBudget::unlimited());
        let want = brute_force_oracle(g).expect("small");
        let ok = exact.optimal && exact.size() == want && exact.certificate.verify(g).is_ok();
        r.check(ok, || {
            format!("{label}: exact {} vs oracle {want}", exact.size())
        });
    };
    for i in 0..500 {
        let n = rng.random_range(1..=14);
        let p = rng.random_range(0.1..0.7);
        let g = random_graph(n, p, rng.random()).unwrap();
        compare(r, &g, &format!("sample {i} (n={n})"));
    }
    // every labeled connected graph up to 6 vertices
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            if g.is_connected() {
                compare(r, &g, &format!("n={n} mask {mask:#x}"));
            }
        }
    }
    // connected draws on 7 and 8 vertices
    let mut drawn = 0;
    while drawn < 200 {
        let n = rng.random_range(7..=8);
        let g = random_graph(n, rng.random_range(0.25..0.6), rng.random()).unwrap();
        if g.is_connected() {
            compare(r, &g, &format!("connected draw {drawn} (n={n})"));
            drawn += 1;
        }
    }
}

fn greedy(r: &mut SuiteReport, rng: &mut ChaCha8Rng) {
    let mut drawn = 0;
    while drawn < 200 {
        let n = rng.random_range(4..=40);
        let g = random_graph(n, rng.random_range(0.08..0.5), rng.random()).unwrap();
        let Ok(bound) = bound_for(&g) else { continue };
        drawn += 1;
        let (cert, trace) = greedy_two_regular(&g);
        let l = Rational::from_integer(trace.cycle_mass() as i64);
        r.check(cert.verify(&g).is_ok() && l >= bound, || {
            format!("n={n} m={}: l={l} below bound {bound}", g.size())
        });
    }
    for i in 0..50 {
        let n = 2 * rng.random_range(2..=40);
        let g = random_cubic_graph(n, rng.random()).unwrap();
        let (cert, _) = greedy_two_regular(&g);
        r.check(cert.verify(&g).is_ok() && 4 * cert.size() > n, || {
            format!("cubic {i} (n={n}): l={} not above n/4", cert.size())
        });
    }
}

fn clawfree(r: &mut SuiteReport, rng: &mut ChaCha8Rng) {
    // (t, d, towers) shapes of order at most 14, then a mixed large sample
    const SMALL: [(usize, usize, usize); 6] = [
        (2, 0, 0),
        (0, 2, 0),
        (2, 1, 0),
        (4, 0, 0),
        (0, 3, 0),
        (2, 2, 0),
    ];
    let mut done = 0;
    while done < 130 {
        let (t, d, towers) = if done < 30 {
            SMALL[done % SMALL.len()]
        } else {
            (
                2 * rng.random_range(0..=12),
                rng.random_range(0..=10),
                rng.random_range(0..=3),
            )
        };
        let Ok(g) = random_clawfree_cubic_with_towers(t, d, towers, rng.random()) else {
            continue;
        };
        done += 1;
        let n = g.order();
        let label = format!("t={t} d={d} towers={towers} (n={n})");
        match construct_large_two_regular(&g) {
            Ok(res) => {
                let size = res.size();
                let sound = res.certificate.verify(&g).is_ok() && size >= threshold(n);
                r.check(sound, || {
                    format!("{label}: size {size}, threshold {}", threshold(n))
                });
                if n <= 14 {
                    let opt = max_induced_two_regular(&g, SearchBudget::unlimited()).size();
                    r.check(size <= opt, || {
                        format!("{label}: size {size} above optimum {opt}")
                    });
                }
            }
            Err(e) => r.check(false, || format!("{label}: {e}")),
        }
    }
}

fn tightness(r: &mut SuiteReport) {
    for k in 1..=5 {
        let g = tightness_graph(k).unwrap();
        let n = g.order();
        let got = construct_large_two_regular(&g).map(|res| res.size());
        r.check(
            n == 20 * k + 34 && matches!(got, Ok(s) if s >= 13 * k + 23),
            || format!("k={k} (n={n}): {got:?}, want at least {}", 13 * k + 23),
        );
    }
}

fn matching(r: &mut SuiteReport, rng: &mut ChaCha8Rng) {
    for i in 0..100 {
        let n = 2 * rng.random_range(1..=8);
        let g = random_biconnected_cubic_multigraph(n, rng.random()).unwrap();
        for e in g.edge_ids() {
            let m = perfect_matching_containing(&g, e);
            let ok = matches!(&m, Ok(Some(m)) if m.is_perfect(&g) && m.contains(e));
            r.check(ok, || {
                format!("multigraph {i} (n={n}): edge {e} in no perfect matching")
            });
        }
    }
    for i in 0..300 {
        let n = rng.random_range(1..=12);
        let m = rng.random_range(0..=2 * n);
        let mut g = Multigraph::new(n);
        if n > 1 {
            for _ in 0..m {
                let u = rng.random_range(0..n);
                let v = (u + rng.random_range(1..n)) % n;
                g.add_edge(u, v).unwrap();
            }
        }
        let perfect = maximum_matching(&g).is_perfect(&g);
        let violator = tutte_violator(&g).unwrap();
        r.check(perfect == violator.is_none(), || {
            format!("multigraph {i} (n={n}): matching perfect {perfect}, violator {violator:?}")
        });
    }
}

fn reduction(r: &mut SuiteReport, rng: &mut ChaCha8Rng) {
    let mut graphs = vec![
        ("k4".to_string(), Fixture::K4.graph()),
        ("prism".to_string(), Fixture::Prism.graph()),
    ];
    for n in [6, 8, 8, 10, 10] {
        graphs.push((
            format!("cubic n={n}"),
            random_cubic_graph(n, rng.random()).unwrap(),
        ));
    }
    for (name, g) in graphs {
        let n = g.order();
        let map = reduce_independent_set(&g).unwrap();
        r.check(
            map.target.order() == 3 * n * n && map.target.max_degree() == 4,
            || {
                format!(
                    "{name}: H has order {} and max degree {}",
                    map.target.order(),
                    map.target.max_degree()
                )
            },
        );
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let independent = g
                .edges()
                .all(|(u, v)| mask >> u & 1 == 0 || mask >> v & 1 == 0);
            if !independent {
                continue;
            }
            let ok = embed_independent_set(&map, &set).is_ok_and(|cert| {
                cert.size() == 3 * set.len() * n
                    && cert.verify(&map.target).is_ok()
                    && extract_independent_set(&map, &cert).as_ref() == Some(&set)
            });
            r.check(ok, || {
                format!("{name}: independent set {set:?} does not round-trip")
            });
        }
    }
}

/// Runs the suites in order.
pub fn run_suites(suites: &[Suite], seed: u64) -> Vec<SuiteReport> {
    suites.iter().map(|s| s.run(seed)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(s.number().to_string().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn failures_are_capped() {
        let mut r = SuiteReport::new(Suite::Fixtures);
        for i in 0..9 {
            r.check(i % 3 != 0, || format!("bad {i}"));
        }
        assert_eq!((r.checks, r.failed, r.failures.len()), (9, 3, 3));
        assert!(r.to_string().contains("FAIL  6/9"));
    }

    #[test]
    fn tightness_suite_passes() {
        assert!(Suite::Tightness.run(0).passed());
    }
}
