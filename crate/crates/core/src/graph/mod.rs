//! Simple graphs, multigraphs and the structural predicates shared by every
//! other module.
//!
//! Vertex ids are dense `usize` values `0..n`. Neighbor lists are kept sorted
//! so that every iteration order in the crate is ascending by id.

mod blocks;
mod cycles;
pub mod io;
mod iso;

pub use blocks::{biconnected_decomposition, BlockDecomposition};
pub use cycles::{girth, has_chord, shortest_cycle};
pub use iso::find_isomorphism;

use std::collections::VecDeque;

use thiserror::Error;

/// Errors raised when an edge set does not describe a simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
}

/// A simple undirected graph on the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

/// A claw `K_{1,3}`: a center with three pairwise nonadjacent neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops, repeated edges and
    /// out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: x,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.adj.iter().all(|l| l.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// First claw found scanning centers and leaf triples in ascending order.
    pub fn find_claw(&self) -> Option<Claw> {
        for (c, nbrs) in self.adj.iter().enumerate() {
            for (i, &x) in nbrs.iter().enumerate() {
                for (j, &y) in nbrs.iter().enumerate().skip(i + 1) {
                    if self.has_edge(x, y) {
                        continue;
                    }
                    for &z in &nbrs[j + 1..] {
                        if !self.has_edge(x, z) && !self.has_edge(y, z) {
                            return Some(Claw {
                                center: c,
                                leaves: [x, y, z],
                            });
                        }
                    }
                }
            }
        }
        None
    }

    pub fn is_claw_free(&self) -> bool {
        self.find_claw().is_none()
    }

    /// Connected components, each sorted, ordered by their minimum vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.connected_components().len() == 1
    }

    pub fn is_forest(&self) -> bool {
        self.size() + self.connected_components().len() == self.order()
    }

    /// Subgraph induced by `vertices`. Returns the subgraph together with the
    /// map from new ids to original ids; new ids follow ascending original id.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        (Graph { adj }, keep)
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(
            perm.len(),
            self.order(),
            "permutation length must equal the order"
        );
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[perm[u]] = list.iter().map(|&w| perm[w]).collect();
            adj[perm[u]].sort_unstable();
        }
        Graph { adj }
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|l| l.iter().map(|&w| w + shift).collect::<Vec<_>>()),
        );
        Graph { adj }
    }

    /// Lossless conversion; edge ids follow the lexicographic edge order.
    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::from_edges(self.order(), self.edges()).expect("simple graphs have no loops")
    }
}

/// Errors raised by multigraph construction and edge lookups.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MultigraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {vertex} out of range for order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("no edge with id {0}")]
    UnknownEdge(usize),
}

/// Undirected loopless multigraph. Edge ids are slots in an append-only
/// table, so removing an edge never renumbers the others.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Multigraph {
    slots: Vec<Option<(usize, usize)>>,
    incidence: Vec<Vec<usize>>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph {
            slots: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, MultigraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Multigraph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.incidence.push(Vec::new());
        self.incidence.len() - 1
    }

    /// Adds an edge and returns its id.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, MultigraphError> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(MultigraphError::VertexOutOfRange {
                    vertex: x,
                    order: n,
                });
            }
        }
        if u == v {
            return Err(MultigraphError::Loop(u));
        }
        let id = self.slots.len();
        self.slots.push(Some((u.min(v), u.max(v))));
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn remove_edge(&mut self, id: usize) -> Result<(usize, usize), MultigraphError> {
        let (u, v) = self.endpoints(id)?;
        self.slots[id] = None;
        self.incidence[u].retain(|&e| e != id);
        self.incidence[v].retain(|&e| e != id);
        Ok((u, v))
    }

    pub fn order(&self) -> usize {
        self.incidence.len()
    }

    pub fn size(&self) -> usize {
        self.slots.iter().flatten().count()
    }

    /// Endpoints `(u, v)` with `u < v`.
    pub fn endpoints(&self, id: usize) -> Result<(usize, usize), MultigraphError> {
        self.slots
            .get(id)
            .copied()
            .flatten()
            .ok_or(MultigraphError::UnknownEdge(id))
    }

    pub fn contains_edge(&self, id: usize) -> bool {
        self.endpoints(id).is_ok()
    }

    /// Endpoint of `id` opposite to `v`.
    pub fn other_end(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.slots[id].expect("live edge");
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Live edges `(id, u, v)` in ascending id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(id, s)| s.map(|(u, v)| (id, u, v)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges().map(|(id, _, _)| id)
    }

    /// Ids of edges incident to `v`, ascending.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn is_regular(&self, k: usize) -> bool {
        self.incidence.iter().all(|l| l.len() == k)
    }

    pub fn is_cubic(&self) -> bool {
        self.is_regular(3)
    }

    /// Ids of the other edges joining the endpoints of `id`.
    pub fn parallel_edges(&self, id: usize) -> Vec<usize> {
        match self.endpoints(id) {
            Ok((u, v)) => self.incidence[u]
                .iter()
                .copied()
                .filter(|&e| e != id && self.other_end(e, u) == v)
                .collect(),
            Err(_) => Vec::new(),
        }
    }

    pub fn has_parallel_edges(&self) -> bool {
        self.edge_ids().any(|e| !self.parallel_edges(e).is_empty())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &e in &self.incidence[u] {
                let w = self.other_end(e, u);
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Collapses parallel edges. This is the only lossy conversion between the
    /// two graph types and is never applied implicitly.
    pub fn to_simple_graph(&self) -> Graph {
        let mut adj = vec![Vec::new(); self.order()];
        for (_, u, v) in self.edges() {
            adj[u].push(v);
            adj[v].push(u);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        Graph { adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::Loop(0)));
        assert_eq!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange {
                vertex: 2,
                order: 2
            })
        );
    }

    #[test]
    fn degree_predicates() {
        let g = k4();
        assert!(g.is_cubic());
        assert_eq!(g.max_degree(), 3);
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert!(!p3.is_cubic());
        assert_eq!(p3.max_degree(), 2);
    }

    #[test]
    fn components_of_two_triangles() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn claw_detection() {
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(
            star.find_claw(),
            Some(Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert!(k4().is_claw_free());
        let k44 = Graph::from_edges(8, (0..4).flat_map(|i| (4..8).map(move |j| (i, j)))).unwrap();
        assert!(!k44.is_claw_free());
    }

    #[test]
    fn multigraph_edge_ids_are_stable() {
        let mut m = Multigraph::from_edges(2, [(0, 1), (0, 1), (1, 0)]).unwrap();
        assert_eq!(m.parallel_edges(0), vec![1, 2]);
        m.remove_edge(1).unwrap();
        assert_eq!(m.edge_ids().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(m.endpoints(2), Ok((0, 1)));
        assert_eq!(m.endpoints(1), Err(MultigraphError::UnknownEdge(1)));
        assert_eq!(m.add_edge(1, 1), Err(MultigraphError::Loop(1)));
        assert_eq!(m.to_simple_graph().size(), 1);
    }

    #[test]
    fn induced_subgraph_maps_ids() {
        let (h, map) = k4().induced_subgraph(&[3, 1, 2]);
        assert_eq!(map, vec![1, 2, 3]);
        assert_eq!(h.size(), 3);
    }
}
