//! Matchings in multigraphs.
//!
//! Maximum matchings come from Edmonds' blossom algorithm run on the
//! underlying simple graph; a matched vertex pair is reported as the
//! smallest-id edge of its parallel bundle. Perfect matchings through or
//! around a given edge are built constructively: delete both endpoints,
//! match the rest, re-add the edge.

mod blossom;
mod gadget;

pub use gadget::{diamond_gadget_substitute, GadgetMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Multigraph, MultigraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error(transparent)]
    Graph(#[from] MultigraphError),
    #[error("Tutte oracle supports at most {max} vertices, got {got}")]
    TooLarge { max: usize, got: usize },
    #[error("edge {0} has no parallel partner")]
    NotParallel(usize),
}

/// A set of pairwise vertex-disjoint edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Matching {
    edges: Vec<usize>,
}

impl Matching {
    pub fn from_edges(mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        Matching { edges }
    }

    /// Sorted edge ids.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: usize) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Every id is a live edge of `g` and no two edges share an endpoint.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let mut covered = vec![false; g.order()];
        for &e in &self.edges {
            let Ok((u, v)) = g.endpoints(e) else {
                return false;
            };
            if covered[u] || covered[v] {
                return false;
            }
            covered[u] = true;
            covered[v] = true;
        }
        true
    }

    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        self.is_valid(g) && 2 * self.edges.len() == g.order()
    }
}

/// Smallest edge id per vertex pair `(u, v)` with `u < v`.
type PairEdges = std::collections::HashMap<(usize, usize), usize>;

/// Simple adjacency plus, for each vertex pair, the smallest edge id joining
/// it.
fn simple_view(g: &Multigraph) -> (Vec<Vec<usize>>, PairEdges) {
    let mut adj = vec![Vec::new(); g.order()];
    let mut first = std::collections::HashMap::new();
    for (id, u, v) in g.edges() {
        if let std::collections::hash_map::Entry::Vacant(slot) = first.entry((u, v)) {
            slot.insert(id);
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    for l in adj.iter_mut() {
        l.sort_unstable();
    }
    (adj, first)
}

fn matching_without(g: &Multigraph, excluded: &[bool]) -> Matching {
    let (adj, first) = simple_view(g);
    let mate = blossom::maximum_mates(&adj, excluded);
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(v, &w)| w != usize::MAX && v < w)
        .map(|(v, &w)| first[&(v, w)])
        .collect();
    Matching::from_edges(edges)
}

/// Maximum-cardinality matching; deterministic for a fixed input.
pub fn maximum_matching(g: &Multigraph) -> Matching {
    matching_without(g, &vec![false; g.order()])
}

/// A perfect matching of `g` that uses edge `e`, or `None` if none exists.
pub fn perfect_matching_containing(
    g: &Multigraph,
    e: usize,
) -> Result<Option<Matching>, MatchingError> {
    let (u, v) = g.endpoints(e)?;
    let mut excluded = vec![false; g.order()];
    excluded[u] = true;
    excluded[v] = true;
    let rest = matching_without(g, &excluded);
    if 2 * rest.len() + 2 != g.order() {
        return Ok(None);
    }
    let mut edges = rest.edges;
    edges.push(e);
    let m = Matching::from_edges(edges);
    debug_assert!(m.is_perfect(g));
    Ok(Some(m))
}

/// A perfect matching of `g` that does not use `e`: the first success of
/// [`perfect_matching_containing`] over the other edges at either endpoint
/// of `e`, in ascending id order.
pub fn perfect_matching_avoiding(
    g: &Multigraph,
    e: usize,
) -> Result<Option<Matching>, MatchingError> {
    let (u, v) = g.endpoints(e)?;
    let mut others: Vec<usize> = g
        .incident(u)
        .iter()
        .chain(g.incident(v))
        .copied()
        .filter(|&f| f != e)
        .collect();
    others.sort_unstable();
    others.dedup();
    for f in others {
        if let Some(m) = perfect_matching_containing(g, f)? {
            debug_assert!(!m.contains(e));
            return Ok(Some(m));
        }
    }
    Ok(None)
}

/// Brute-force Tutte check: the first vertex set `S` (in increasing bitmask
/// order) such that `g - S` has more than `|S|` odd components. `None`
/// exactly when `g` has a perfect matching. Limited to 20 vertices.
pub fn tutte_violator(g: &Multigraph) -> Result<Option<Vec<usize>>, MatchingError> {
    const MAX: usize = 20;
    let n = g.order();
    if n > MAX {
        return Err(MatchingError::TooLarge { max: MAX, got: n });
    }
    let nbrs: Vec<u32> = (0..n)
        .map(|v| {
            g.incident(v)
                .iter()
                .fold(0u32, |m, &e| m | 1 << g.other_end(e, v))
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for s in 0..full {
        let mut rest = full & !s;
        let mut odd = 0;
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = nbrs[v] & !s & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            if comp.count_ones() % 2 == 1 {
                odd += 1;
            }
            rest &= !comp;
        }
        if odd > s.count_ones() {
            return Ok(Some((0..n).filter(|&v| s >> v & 1 == 1).collect()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Multigraph {
        Multigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn cycles() {
        let c6 = cycle(6);
        let m = maximum_matching(&c6);
        assert_eq!(m.len(), 3);
        assert!(m.is_perfect(&c6));
        assert_eq!(maximum_matching(&cycle(5)).len(), 2);
    }

    #[test]
    fn odd_blossom_is_contracted() {
        // triangle 0-1-2 with pendant paths 0-3 and 2-4-5
        let g =
            Multigraph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (2, 4), (4, 5)]).unwrap();
        assert_eq!(maximum_matching(&g).len(), 3);
    }

    #[test]
    fn doubled_edge_containing() {
        let g = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(
            perfect_matching_containing(&g, 1).unwrap(),
            Some(Matching::from_edges(vec![1]))
        );
        assert_eq!(
            perfect_matching_avoiding(&g, 0).unwrap(),
            Some(Matching::from_edges(vec![1]))
        );
    }

    #[test]
    fn avoiding_cases() {
        let c4 = cycle(4);
        for e in 0..4 {
            let m = perfect_matching_avoiding(&c4, e).unwrap().unwrap();
            assert!(!m.contains(e) && m.is_perfect(&c4));
        }
        let k2 = Multigraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(perfect_matching_avoiding(&k2, 0).unwrap(), None);
        assert!(perfect_matching_containing(&k2, 7).is_err());
    }

    #[test]
    fn tutte_examples() {
        assert_eq!(tutte_violator(&cycle(5)).unwrap(), Some(vec![]));
        assert_eq!(tutte_violator(&cycle(6)).unwrap(), None);
        // star K_{1,3}: removing the center leaves three odd components
        let star = Multigraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tutte_violator(&star).unwrap(), Some(vec![0]));
    }
}
