use super::Multigraph;

/// Blocks, cut vertices and bridges of a multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Edge-id sets, each sorted, ordered by smallest edge id.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
    pub bridges: Vec<usize>,
}

impl BlockDecomposition {
    /// Sorted vertex set of block `b` in `g`.
    pub fn block_vertices(&self, g: &Multigraph, b: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.blocks[b]
            .iter()
            .flat_map(|&e| {
                let (u, v) = g.endpoints(e).expect("block edge");
                [u, v]
            })
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    /// Index of the block containing each edge id (`usize::MAX` for dead ids).
    pub fn block_of_edge(&self, g: &Multigraph) -> Vec<usize> {
        let slots = g.edges().map(|(id, _, _)| id + 1).max().unwrap_or(0);
        let mut out = vec![usize::MAX; slots];
        for (b, edges) in self.blocks.iter().enumerate() {
            for &e in edges {
                out[e] = b;
            }
        }
        out
    }
}

/// Hopcroft-Tarjan lowpoint search over edges. Parallel edges are told
/// apart by id, so a doubled edge forms a 2-cycle block.
pub fn biconnected_decomposition(g: &Multigraph) -> BlockDecomposition {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut edge_stack: Vec<usize> = Vec::new();
    let mut time = 0;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, edge used to enter it, next incidence position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (v, parent_edge, ref mut pos)) = stack.last_mut() {
            if let Some(&e) = g.incident(v).get(*pos) {
                *pos += 1;
                if e == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    edge_stack.push(e);
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, e, 0));
                } else if disc[w] < disc[v] {
                    low[v] = low[v].min(disc[w]);
                    edge_stack.push(e);
                }
            } else {
                stack.pop();
                if let Some(&(u, _, _)) = stack.last() {
                    low[u] = low[u].min(low[v]);
                    if low[v] >= disc[u] {
                        if u != root {
                            is_cut[u] = true;
                        }
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == parent_edge {
                                break;
                            }
                        }
                        block.sort_unstable();
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    blocks.sort_by_key(|b| b[0]);
    let bridges = blocks
        .iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .collect();
    BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
        bridges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_has_three_bridges() {
        let g = Multigraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let d = biconnected_decomposition(&g);
        assert_eq!(d.blocks.len(), 3);
        assert_eq!(d.cut_vertices, vec![1, 2]);
        assert_eq!(d.bridges, vec![0, 1, 2]);
    }

    #[test]
    fn cycle_is_one_block() {
        let g = Multigraph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let d = biconnected_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![0, 1, 2, 3, 4]]);
        assert!(d.bridges.is_empty());
        assert!(d.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie() {
        let g =
            Multigraph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let d = biconnected_decomposition(&g);
        assert_eq!(d.blocks.len(), 2);
        assert_eq!(d.cut_vertices, vec![2]);
        assert_eq!(d.block_vertices(&g, 1), vec![2, 3, 4]);
    }

    #[test]
    fn parallel_pair_is_not_a_bridge() {
        let g = Multigraph::from_edges(3, [(0, 1), (0, 1), (1, 2)]).unwrap();
        let d = biconnected_decomposition(&g);
        assert_eq!(d.blocks, vec![vec![0, 1], vec![2]]);
        assert_eq!(d.bridges, vec![2]);
        assert_eq!(d.cut_vertices, vec![1]);
    }
}
