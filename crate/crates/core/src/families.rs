//! Deterministic constructors for the graph families used by the rest of the
//! crate, the named fixtures, and a seeded random generator for
//! connected claw-free cubic graphs, plus plain random graphs for testing.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::io::parse_edgelist;
use crate::graph::{biconnected_decomposition, Graph, Multigraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter out of range: {0}")]
    Domain(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("no connected loop-free unit pairing found for {0} after {1} attempts")]
    Infeasible(String, usize),
}

/// Vertex ids of one diamond in a necklace; `a`/`b` are the nonadjacent pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Diamond {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecklaceLayout {
    pub k: usize,
    pub diamonds: Vec<Diamond>,
}

impl NecklaceLayout {
    /// The set `{a_i, c_i, d_i}` over all diamonds: disjoint triangles that
    /// together induce a 2-regular subgraph of order `3k`.
    pub fn triangle_set(&self) -> Vec<usize> {
        self.diamonds.iter().flat_map(|d| [d.a, d.c, d.d]).collect()
    }
}

fn push_diamond(edges: &mut Vec<(usize, usize)>, base: usize) -> Diamond {
    let d = Diamond {
        a: base,
        b: base + 1,
        c: base + 2,
        d: base + 3,
    };
    edges.extend([(d.a, d.c), (d.a, d.d), (d.b, d.c), (d.b, d.d), (d.c, d.d)]);
    d
}

/// The diamond-necklace `N_k`: `k` diamonds with `a_i` joined to
/// `b_{i+1}` cyclically. Diamond `i` occupies ids `4i..4i+4`.
pub fn diamond_necklace(k: usize) -> Result<(Graph, NecklaceLayout), FamilyError> {
    if k < 2 {
        return Err(FamilyError::Domain(format!(
            "necklace needs k >= 2, got {k}"
        )));
    }
    let mut edges = Vec::with_capacity(6 * k);
    let diamonds: Vec<Diamond> = (0..k).map(|i| push_diamond(&mut edges, 4 * i)).collect();
    for i in 0..k {
        edges.push((diamonds[i].a, diamonds[(i + 1) % k].b));
    }
    let g = Graph::from_edges(4 * k, edges).expect("necklace edges are simple");
    Ok((g, NecklaceLayout { k, diamonds }))
}

/// Ids of the two base-triangle vertices of [`Fixture::Tower`] that have a
/// neighbor outside the tower (degree 2 inside it).
pub const TOWER_ATTACHMENTS: [usize; 2] = [0, 1];

/// Appends a tower on ids `base..base+10` and returns its two attachment
/// vertices. Layout: base triangle `{base, base+1, base+2}`, middle
/// triangle `{base+3, base+4, base+5}` with `base+3` joined to `base+2`,
/// diamond `{base+6..base+10}` hanging from `base+4` and `base+5`.
fn push_tower(edges: &mut Vec<(usize, usize)>, base: usize) -> [usize; 2] {
    let [t1, t2, t0] = [base, base + 1, base + 2];
    let [m2, m0, m1] = [base + 3, base + 4, base + 5];
    edges.extend([
        (t0, t1),
        (t0, t2),
        (t1, t2),
        (t0, m2),
        (m0, m1),
        (m0, m2),
        (m1, m2),
    ]);
    let d = push_diamond(edges, base + 6);
    edges.extend([(m0, d.a), (m1, d.b)]);
    [t1, t2]
}

/// Middle triangle plus diamond hanging from vertex `hook` (7 vertices on
/// `base..base+7`), i.e. a tower without its base triangle.
fn push_tower_top(edges: &mut Vec<(usize, usize)>, base: usize, hook: usize) {
    let [m2, m0, m1] = [base, base + 1, base + 2];
    edges.extend([(hook, m2), (m0, m1), (m0, m2), (m1, m2)]);
    let d = push_diamond(edges, base + 3);
    edges.extend([(m0, d.a), (m1, d.b)]);
}

/// Two towers sharing one base triangle on `base..base+17`. Returns the
/// base vertex with a free edge.
fn push_double_tower(edges: &mut Vec<(usize, usize)>, base: usize) -> usize {
    let [v, x, y] = [base, base + 1, base + 2];
    edges.extend([(v, x), (v, y), (x, y)]);
    push_tower_top(edges, base + 3, x);
    push_tower_top(edges, base + 10, y);
    v
}

/// The graph `G_k` of order `20k + 34`: two double towers joined by a path
/// whose `2k` internal vertices are replaced by towers.
pub fn tightness_graph(k: usize) -> Result<Graph, FamilyError> {
    if k < 1 {
        return Err(FamilyError::Domain(format!(
            "tightness graph needs k >= 1, got {k}"
        )));
    }
    let n = 20 * k + 34;
    let mut edges = Vec::with_capacity(3 * n / 2);
    let mut prev = push_double_tower(&mut edges, 0);
    for i in 0..2 * k {
        let [l, r] = push_tower(&mut edges, 17 + 10 * i);
        edges.push((prev, l));
        prev = r;
    }
    let last = push_double_tower(&mut edges, 17 + 20 * k);
    edges.push((prev, last));
    Ok(Graph::from_edges(n, edges).expect("tightness edges are simple"))
}

pub fn complete_bipartite(k: usize) -> Graph {
    Graph::from_edges(2 * k, (0..k).flat_map(|i| (k..2 * k).map(move |j| (i, j))))
        .expect("bipartite edges are simple")
}

/// Named fixture graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    K4,
    /// `C_3 x K_2`.
    Prism,
    /// Two diamonds hanging off two adjacent triangles (order 14).
    TwoTowers,
    /// Three towers on a common base triangle (order 24).
    ThreeTowers,
    /// Cubic graph of order 12 with induced cycle number 6.
    HalfCubic,
    /// A standalone tower (order 10); see [`TOWER_ATTACHMENTS`].
    Tower,
    /// The drawing of `G_2` (order 74).
    TightnessK2,
    CompleteBipartite(usize),
}

const TWO_TOWERS: &str = include_str!("../fixtures/two_towers.el");
const THREE_TOWERS: &str = include_str!("../fixtures/three_towers.el");
const HALF_CUBIC: &str = include_str!("../fixtures/half_cubic.el");
const TIGHTNESS_K2: &str = include_str!("../fixtures/tightness_k2.el");

impl Fixture {
    pub const NAMED: [Fixture; 7] = [
        Fixture::K4,
        Fixture::Prism,
        Fixture::TwoTowers,
        Fixture::ThreeTowers,
        Fixture::HalfCubic,
        Fixture::Tower,
        Fixture::TightnessK2,
    ];

    pub fn graph(self) -> Graph {
        let embedded = |s: &str| parse_edgelist(s).expect("embedded fixture parses");
        match self {
            Fixture::K4 => {
                Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
            }
            Fixture::Prism => Graph::from_edges(
                6,
                [
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 4),
                    (4, 5),
                    (3, 5),
                    (0, 3),
                    (1, 4),
                    (2, 5),
                ],
            )
            .unwrap(),
            Fixture::TwoTowers => embedded(TWO_TOWERS),
            Fixture::ThreeTowers => embedded(THREE_TOWERS),
            Fixture::HalfCubic => embedded(HALF_CUBIC),
            Fixture::TightnessK2 => embedded(TIGHTNESS_K2),
            Fixture::Tower => {
                let mut edges = Vec::new();
                push_tower(&mut edges, 0);
                Graph::from_edges(10, edges).unwrap()
            }
            Fixture::CompleteBipartite(k) => complete_bipartite(k),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::K4 => f.write_str("k4"),
            Fixture::Prism => f.write_str("prism"),
            Fixture::TwoTowers => f.write_str("two_towers"),
            Fixture::ThreeTowers => f.write_str("three_towers"),
            Fixture::HalfCubic => f.write_str("half_cubic"),
            Fixture::Tower => f.write_str("tower"),
            Fixture::TightnessK2 => f.write_str("tightness_k2"),
            Fixture::CompleteBipartite(k) => write!(f, "complete_bipartite:{k}"),
        }
    }
}

impl FromStr for Fixture {
    type Err = FamilyError;

    /// Accepts the names printed by `Display`; `complete_bipartite:K` (or
    /// `kKK`, e.g. `k44`) selects `K_{K,K}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(f) = Fixture::NAMED.iter().find(|f| f.to_string() == s) {
            return Ok(*f);
        }
        let k = s
            .strip_prefix("complete_bipartite:")
            .and_then(|k| k.parse().ok())
            .or_else(|| {
                let digits = s.strip_prefix('k')?;
                let half = digits.len() / 2;
                (digits.len() % 2 == 0 && half > 0 && digits[..half] == digits[half..])
                    .then(|| digits[..half].parse().ok())
                    .flatten()
            });
        match k {
            Some(k) if k >= 1 => Ok(Fixture::CompleteBipartite(k)),
            _ => Err(FamilyError::UnknownFixture(s.to_string())),
        }
    }
}

const MAX_ATTEMPTS: usize = 1000;

/// Random connected claw-free cubic graph of order `3t + 4d` whose
/// triangle-diamond partition has exactly `t` triangle units and `d`
/// diamond units.
///
/// Units are joined by pairing their free vertices uniformly at random
/// (three per triangle, two per diamond). Pairings that join a unit to
/// itself or leave the result disconnected are rejected and redrawn. The
/// resulting distribution is not uniform over claw-free cubic graphs.
pub fn random_clawfree_cubic(t: usize, d: usize, seed: u64) -> Result<Graph, FamilyError> {
    random_clawfree_cubic_with_towers(t, d, 0, seed)
}

/// Like [`random_clawfree_cubic`], additionally planting `towers` towers,
/// each joined to the rest through its two attachment vertices. The result
/// has `t + 2·towers` triangle units and `d + towers` diamond units.
pub fn random_clawfree_cubic_with_towers(
    t: usize,
    d: usize,
    towers: usize,
    seed: u64,
) -> Result<Graph, FamilyError> {
    let label = format!("t={t}, d={d}, towers={towers}");
    if t % 2 == 1 {
        return Err(FamilyError::Domain(format!(
            "{label}: an odd number of triangle units leaves one free vertex unpaired"
        )));
    }
    if t == 0 && d + towers < 2 {
        return Err(FamilyError::Infeasible(label, 0));
    }
    let n = 3 * t + 4 * d + 10 * towers;
    let mut edges = Vec::with_capacity(3 * n / 2);
    // (unit index, free vertex)
    let mut stubs: Vec<(usize, usize)> = Vec::new();
    let mut next = 0;
    let mut unit = 0;
    for _ in 0..t {
        let [x, y, z] = [next, next + 1, next + 2];
        edges.extend([(x, y), (y, z), (x, z)]);
        stubs.extend([(unit, x), (unit, y), (unit, z)]);
        next += 3;
        unit += 1;
    }
    for _ in 0..d {
        let dm = push_diamond(&mut edges, next);
        stubs.extend([(unit, dm.a), (unit, dm.b)]);
        next += 4;
        unit += 1;
    }
    for _ in 0..towers {
        let [l, r] = push_tower(&mut edges, next);
        stubs.extend([(unit, l), (unit, r)]);
        next += 10;
        unit += 1;
    }
    debug_assert_eq!(next, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        stubs.shuffle(&mut rng);
        if stubs.chunks(2).any(|p| p[0].0 == p[1].0) {
            continue;
        }
        let all = edges
            .iter()
            .copied()
            .chain(stubs.chunks(2).map(|p| (p[0].1, p[1].1)));
        let g = Graph::from_edges(n, all).expect("each free vertex is paired once");
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(FamilyError::Infeasible(label, MAX_ATTEMPTS))
}

/// Erdős–Rényi `G(n, p)`: each pair `u < v` in lexicographic order is kept
/// with probability `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph, FamilyError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(FamilyError::Domain(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Ok(Graph::from_edges(n, edges).expect("pairs are distinct"))
}

/// Shuffled point pairings for a cubic graph on `n` vertices, yielded until
/// `accept` takes one.
fn cubic_pairing<T>(
    n: usize,
    seed: u64,
    label: &str,
    mut accept: impl FnMut(&[(usize, usize)]) -> Option<T>,
) -> Result<T, FamilyError> {
    if n % 2 == 1 || n < 2 {
        return Err(FamilyError::Domain(format!(
            "{label}: order {n} must be even and positive"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points: Vec<usize> = (0..3 * n).map(|i| i / 3).collect();
    for _ in 0..MAX_ATTEMPTS {
        points.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = points.chunks(2).map(|p| (p[0], p[1])).collect();
        if pairs.iter().any(|&(u, v)| u == v) {
            continue;
        }
        if let Some(out) = accept(&pairs) {
            return Ok(out);
        }
    }
    Err(FamilyError::Infeasible(label.to_string(), MAX_ATTEMPTS))
}

/// Random connected simple cubic graph from the configuration model, by
/// rejection. Needs even `n >= 4`.
pub fn random_cubic_graph(n: usize, seed: u64) -> Result<Graph, FamilyError> {
    if n < 4 {
        return Err(FamilyError::Domain(format!("cubic order {n} below 4")));
    }
    cubic_pairing(n, seed, &format!("cubic n={n}"), |pairs| {
        Graph::from_edges(n, pairs.iter().copied())
            .ok()
            .filter(Graph::is_connected)
    })
}

/// Random 2-connected loopless cubic multigraph from the configuration
/// model; parallel edges are kept. Needs even `n >= 2`.
pub fn random_biconnected_cubic_multigraph(n: usize, seed: u64) -> Result<Multigraph, FamilyError> {
    cubic_pairing(n, seed, &format!("cubic multigraph n={n}"), |pairs| {
        let g = Multigraph::from_edges(n, pairs.iter().copied()).expect("no loops");
        let blocks = biconnected_decomposition(&g);
        (g.is_connected() && blocks.cut_vertices.is_empty() && blocks.bridges.is_empty())
            .then_some(g)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_generators() {
        for seed in 0..20 {
            let g = random_cubic_graph(12, seed).unwrap();
            assert!(g.is_cubic() && g.is_connected());
            let h = random_biconnected_cubic_multigraph(8, seed).unwrap();
            assert!(h.is_cubic() && h.is_connected());
            assert!(biconnected_decomposition(&h).cut_vertices.is_empty());
        }
        assert_eq!(random_cubic_graph(10, 3), random_cubic_graph(10, 3));
        assert!(random_cubic_graph(7, 0).is_err());
        assert!(random_biconnected_cubic_multigraph(2, 0)
            .unwrap()
            .has_parallel_edges());
        assert!(random_graph(5, 1.5, 0).is_err());
        assert_eq!(random_graph(6, 1.0, 0).unwrap().size(), 15);
    }
    use crate::graph::find_isomorphism;
    use crate::is_two_regular_induced;

    #[test]
    fn necklace_shape() {
        let (g, layout) = diamond_necklace(8).unwrap();
        assert_eq!(g.order(), 32);
        assert!(g.is_cubic() && g.is_claw_free() && g.is_connected());
        let cert = is_two_regular_induced(&g, &layout.triangle_set()).unwrap();
        assert_eq!(cert.size(), 24);
        assert!(diamond_necklace(1).is_err());
        assert_eq!(diamond_necklace(2).unwrap().0.order(), 8);
    }

    #[test]
    fn fixture_orders_and_degrees() {
        let expect = [
            (Fixture::K4, 4),
            (Fixture::Prism, 6),
            (Fixture::TwoTowers, 14),
            (Fixture::ThreeTowers, 24),
            (Fixture::HalfCubic, 12),
            (Fixture::Tower, 10),
            (Fixture::TightnessK2, 74),
            (Fixture::CompleteBipartite(4), 8),
        ];
        for (f, n) in expect {
            let g = f.graph();
            assert_eq!(g.order(), n, "{f}");
            if f != Fixture::Tower {
                assert!(
                    g.is_regular(if f == Fixture::CompleteBipartite(4) {
                        4
                    } else {
                        3
                    }),
                    "{f}"
                );
            }
        }
        let tower = Fixture::Tower.graph();
        let low: Vec<usize> = (0..10).filter(|&v| tower.degree(v) == 2).collect();
        assert_eq!(low, TOWER_ATTACHMENTS.to_vec());
        for f in [
            Fixture::TwoTowers,
            Fixture::ThreeTowers,
            Fixture::TightnessK2,
        ] {
            assert!(f.graph().is_claw_free(), "{f}");
        }
    }

    #[test]
    fn fixture_names_round_trip() {
        for f in Fixture::NAMED {
            assert_eq!(f.to_string().parse::<Fixture>().unwrap(), f);
        }
        assert_eq!(
            "k44".parse::<Fixture>().unwrap(),
            Fixture::CompleteBipartite(4)
        );
        assert_eq!(
            "complete_bipartite:5".parse::<Fixture>().unwrap(),
            Fixture::CompleteBipartite(5)
        );
        assert!("nine_towers".parse::<Fixture>().is_err());
    }

    #[test]
    fn tightness_orders() {
        assert_eq!(tightness_graph(1).unwrap().order(), 54);
        assert!(tightness_graph(0).is_err());
        for k in 1..=5 {
            let g = tightness_graph(k).unwrap();
            assert_eq!(g.order(), 20 * k + 34);
            assert!(g.is_cubic() && g.is_claw_free() && g.is_connected());
        }
    }

    #[test]
    fn tightness_two_matches_drawing() {
        let built = tightness_graph(2).unwrap();
        assert!(find_isomorphism(&built, &Fixture::TightnessK2.graph()).is_some());
    }

    #[test]
    fn random_generator_outputs() {
        for seed in 0..20 {
            let g = random_clawfree_cubic(6, 3, seed).unwrap();
            assert_eq!(g.order(), 30);
            assert!(g.is_cubic() && g.is_claw_free() && g.is_connected());
        }
        assert_eq!(
            random_clawfree_cubic(6, 3, 11),
            random_clawfree_cubic(6, 3, 11)
        );
        assert!(random_clawfree_cubic(3, 1, 0).is_err());
        assert!(random_clawfree_cubic(0, 1, 0).is_err());
        let prism = random_clawfree_cubic(2, 0, 5).unwrap();
        assert!(find_isomorphism(&prism, &Fixture::Prism.graph()).is_some());
    }
}
