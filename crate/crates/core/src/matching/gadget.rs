use serde::Serialize;

use super::{Matching, MatchingError};
use crate::graph::Multigraph;

/// Bookkeeping for one diamond substitution: the removed edge `e = uv`,
/// the new edges `e1 = au`, `e2 = bv`, `e3 = cd`, and the diamond vertices
/// `[a, b, c, d]` (`ab` missing).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetMap {
    pub e: usize,
    pub e1: usize,
    pub e2: usize,
    pub e3: usize,
    pub vertices: [usize; 4],
    /// Edge ids below this are edges of the original multigraph.
    pub first_new_edge: usize,
}

impl GadgetMap {
    /// Pulls a matching of the substituted graph back to the original: keep
    /// the original edges and add `e` exactly when `e1` was used.
    pub fn to_original(&self, m: &Matching) -> Matching {
        let mut edges: Vec<usize> = m
            .edges()
            .iter()
            .copied()
            .filter(|&f| f < self.first_new_edge)
            .collect();
        if m.contains(self.e1) {
            edges.push(self.e);
        }
        Matching::from_edges(edges)
    }
}

/// Replaces `e` (one edge of a parallel pair `u, v`, `u < v`) by a diamond
/// joined through `au` and `bv`. All other edge ids are kept.
pub fn diamond_gadget_substitute(
    g: &Multigraph,
    e: usize,
) -> Result<(Multigraph, GadgetMap), MatchingError> {
    let (u, v) = g.endpoints(e)?;
    if g.parallel_edges(e).is_empty() {
        return Err(MatchingError::NotParallel(e));
    }
    let mut h = g.clone();
    h.remove_edge(e)?;
    let [a, b, c, d] = std::array::from_fn(|_| h.add_vertex());
    let first_new_edge = h.add_edge(a, c)?;
    h.add_edge(a, d)?;
    h.add_edge(b, c)?;
    h.add_edge(b, d)?;
    let e3 = h.add_edge(c, d)?;
    let e1 = h.add_edge(a, u)?;
    let e2 = h.add_edge(b, v)?;
    Ok((
        h,
        GadgetMap {
            e,
            e1,
            e2,
            e3,
            vertices: [a, b, c, d],
            first_new_edge,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::super::perfect_matching_containing;
    use super::*;

    #[test]
    fn doubled_edge() {
        let g = Multigraph::from_edges(2, [(0, 1), (0, 1)]).unwrap();
        let (h, map) = diamond_gadget_substitute(&g, 0).unwrap();
        assert_eq!(h.order(), 6);
        assert!(map.vertices.iter().all(|&x| h.degree(x) == 3));
        let with = perfect_matching_containing(&h, map.e1).unwrap().unwrap();
        assert!(with.contains(map.e2) && with.contains(map.e3));
        assert_eq!(map.to_original(&with), Matching::from_edges(vec![0]));
        let without = perfect_matching_containing(&h, 1).unwrap().unwrap();
        assert!(!without.contains(map.e1));
        assert_eq!(map.to_original(&without), Matching::from_edges(vec![1]));
    }

    #[test]
    fn cubic_stays_cubic() {
        // two doubled edges joined into a 4-cycle
        let g =
            Multigraph::from_edges(4, [(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)]).unwrap();
        let (h, map) = diamond_gadget_substitute(&g, 1).unwrap();
        assert!(h.is_cubic() && h.is_connected());
        for f in h.edge_ids() {
            let m = perfect_matching_containing(&h, f).unwrap().unwrap();
            assert!(map.to_original(&m).is_perfect(&g));
        }
    }

    #[test]
    fn rejects_simple_edge() {
        let g = Multigraph::from_edges(2, [(0, 1)]).unwrap();
        assert_eq!(
            diamond_gadget_substitute(&g, 0).unwrap_err(),
            MatchingError::NotParallel(0)
        );
    }
}
