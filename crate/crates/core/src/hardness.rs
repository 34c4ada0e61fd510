//! Reduction from independent sets in cubic graphs to induced 2-regular
//! subgraphs of graphs with maximum degree 4.
//!
//! Every vertex `v` picks an incident edge `e_v`, which is subdivided by a
//! new vertex `v'` next to `v` (an edge picked from both ends is subdivided
//! twice). A path `P_v` on `3n - 2` vertices then joins `v` to `v'`, closing
//! an induced cycle `C_v` of length `3n`. Independent sets of size `k` map to
//! induced 2-regular subgraphs of order `3kn`.

use serde::Serialize;
use thiserror::Error;

use crate::certificate::TwoRegularCertificate;
use crate::graph::Graph;
use crate::is_two_regular_induced;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HardnessError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: usize, degree: usize },
    #[error("vertices {0} and {1} are adjacent")]
    NotIndependent(usize, usize),
    #[error("vertex {0} is not in the source graph")]
    OutOfRange(usize),
}

/// The gadget graph and where each source vertex went.
///
/// Target ids: source vertices keep their ids, `v'` is `n + v`, and `P_v`
/// occupies `2n + v(3n - 2) ..` in order from the end next to `v`.
#[derive(Clone, Debug, Serialize)]
pub struct ReductionMap {
    #[serde(skip)]
    pub source: Graph,
    #[serde(skip)]
    pub target: Graph,
    /// `e_v` for every source vertex.
    pub chosen_edges: Vec<(usize, usize)>,
    /// `v'` for every source vertex.
    pub subdivision: Vec<usize>,
    /// `C_v` as `v, P_v, v'`.
    pub cycles: Vec<Vec<usize>>,
}

pub fn reduce_independent_set(g: &Graph) -> Result<ReductionMap, HardnessError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) != 3) {
        return Err(HardnessError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    let n = g.order();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    // edges come in lexicographic order, so the first hit has the smallest id
    let chosen: Vec<usize> = (0..n)
        .map(|v| {
            edges
                .iter()
                .position(|&(a, b)| a == v || b == v)
                .expect("cubic")
        })
        .collect();
    let prime = |v: usize| n + v;
    let mut out = Vec::with_capacity(3 * n * n * 2);
    for (id, &(a, b)) in edges.iter().enumerate() {
        match (chosen[a] == id, chosen[b] == id) {
            (false, false) => out.push((a, b)),
            (true, false) => out.extend([(a, prime(a)), (prime(a), b)]),
            (false, true) => out.extend([(a, prime(b)), (prime(b), b)]),
            (true, true) => out.extend([(a, prime(a)), (prime(a), prime(b)), (prime(b), b)]),
        }
    }
    let len = 3 * n - 2;
    let mut cycles = Vec::with_capacity(n);
    for v in 0..n {
        let path: Vec<usize> = (0..len).map(|i| 2 * n + v * len + i).collect();
        out.push((v, path[0]));
        out.extend(path.windows(2).map(|w| (w[0], w[1])));
        out.push((path[len - 1], prime(v)));
        let mut c = vec![v];
        c.extend(&path);
        c.push(prime(v));
        cycles.push(c);
    }
    let target = Graph::from_edges(3 * n * n, out).expect("gadget is simple");
    Ok(ReductionMap {
        source: g.clone(),
        target,
        chosen_edges: chosen.iter().map(|&id| edges[id]).collect(),
        subdivision: (0..n).map(prime).collect(),
        cycles,
    })
}

/// The union of `C_v` over an independent set `I`.
pub fn embed_independent_set(
    map: &ReductionMap,
    set: &[usize],
) -> Result<TwoRegularCertificate, HardnessError> {
    let n = map.source.order();
    if let Some(&v) = set.iter().find(|&&v| v >= n) {
        return Err(HardnessError::OutOfRange(v));
    }
    for (i, &u) in set.iter().enumerate() {
        if let Some(&v) = set[i + 1..].iter().find(|&&v| map.source.has_edge(u, v)) {
            return Err(HardnessError::NotIndependent(u.min(v), u.max(v)));
        }
    }
    let vertices: Vec<usize> = set
        .iter()
        .flat_map(|&v| map.cycles[v].iter().copied())
        .collect();
    let cert = is_two_regular_induced(&map.target, &vertices)
        .expect("cycles of independent vertices are far apart");
    Ok(cert)
}

/// `{v : C_v ⊆ cert}` when the certificate is exactly a union of the
/// `C_v`; `None` for any other shape.
pub fn extract_independent_set(
    map: &ReductionMap,
    cert: &TwoRegularCertificate,
) -> Option<Vec<usize>> {
    let picked: Vec<usize> = (0..map.source.order())
        .filter(|&v| map.cycles[v].iter().all(|&x| cert.contains(x)))
        .collect();
    let covered: usize = picked.iter().map(|&v| map.cycles[v].len()).sum();
    (covered == cert.size()).then_some(picked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Fixture;

    #[test]
    fn k4_gadget() {
        let map = reduce_independent_set(&Fixture::K4.graph()).unwrap();
        assert_eq!(map.target.order(), 48);
        assert_eq!(map.target.max_degree(), 4);
        for c in &map.cycles {
            assert_eq!(c.len(), 12);
            is_two_regular_induced(&map.target, c).unwrap();
        }
        let one = embed_independent_set(&map, &[2]).unwrap();
        assert_eq!(one.size(), 12);
        assert_eq!(extract_independent_set(&map, &one), Some(vec![2]));
        assert_eq!(embed_independent_set(&map, &[]).unwrap().size(), 0);
        assert_eq!(
            embed_independent_set(&map, &[1, 3]).unwrap_err(),
            HardnessError::NotIndependent(1, 3)
        );
    }

    #[test]
    fn prism_gadget() {
        let g = Fixture::Prism.graph();
        let map = reduce_independent_set(&g).unwrap();
        assert_eq!(map.target.order(), 108);
        let i: Vec<usize> = (0..6)
            .filter(|&v| !g.has_edge(0, v) && v != 0)
            .take(1)
            .chain([0])
            .collect();
        let cert = embed_independent_set(&map, &i).unwrap();
        assert_eq!(cert.size(), 36);
    }

    #[test]
    fn non_canonical_is_flagged() {
        let map = reduce_independent_set(&Fixture::K4.graph()).unwrap();
        let cert = embed_independent_set(&map, &[0]).unwrap();
        let partial = TwoRegularCertificate::from_cycles(vec![cert.cycles()[0][..11].to_vec()]);
        assert_eq!(extract_independent_set(&map, &partial), None);
        assert!(reduce_independent_set(&Fixture::CompleteBipartite(4).graph()).is_err());
    }
}
