use std::collections::VecDeque;

use serde::Serialize;

use super::partition::{Tower, UnitKind, UnitPartition};
use super::ClawFreeError;
use crate::graph::{biconnected_decomposition, Graph, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Uncolored,
    Red,
    Yellow,
}

/// What a vertex of `H` stands for in the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Contracted {
    Triangle([usize; 3]),
    /// Index into [`HGraph::towers`].
    Tower(usize),
}

/// The graph obtained by contracting every tower to a vertex of degree two
/// and every remaining triangle unit to a vertex of degree three.
#[derive(Clone, Debug)]
pub struct HGraph {
    pub h: Multigraph,
    pub contracted: Vec<Contracted>,
    pub color: Vec<Color>,
    pub towers: Vec<Tower>,
    /// Input-graph endpoints of every edge of `h`.
    ends: Vec<(usize, usize)>,
    /// `H` vertex owning each input vertex.
    owner: Vec<usize>,
}

impl HGraph {
    /// Endpoint in `h(x)` of the input edge behind `H` edge `e`.
    pub fn end_in(&self, e: usize, x: usize) -> usize {
        let (a, b) = self.ends[e];
        if self.owner[a] == x {
            a
        } else {
            debug_assert_eq!(self.owner[b], x);
            b
        }
    }

    pub fn owner(&self, v: usize) -> usize {
        self.owner[v]
    }

    /// Input vertices contracted into `x`.
    pub fn members(&self, x: usize) -> Vec<usize> {
        match self.contracted[x] {
            Contracted::Triangle(t) => t.to_vec(),
            Contracted::Tower(i) => self.towers[i].vertices(),
        }
    }

    pub(crate) fn owner_len(&self) -> usize {
        self.owner.len()
    }

    /// Order of `h(x)`: 3 for a triangle, 10 for a tower.
    pub fn weight(&self, x: usize) -> usize {
        match self.contracted[x] {
            Contracted::Triangle(_) => 3,
            Contracted::Tower(_) => 10,
        }
    }

    /// The triangle put into the solution when `x` joins the independent
    /// set: the triangle itself, or the base of the tower.
    pub fn triangle_of(&self, x: usize) -> [usize; 3] {
        match self.contracted[x] {
            Contracted::Triangle(t) => t,
            Contracted::Tower(i) => self.towers[i].base,
        }
    }
}

/// Contracts towers and triangle units of an irreducible graph.
pub fn build_h(g: &Graph, p: &UnitPartition, towers: &[Tower]) -> HGraph {
    let mut in_tower = vec![usize::MAX; g.order()];
    for (i, t) in towers.iter().enumerate() {
        for v in t.vertices() {
            in_tower[v] = i;
        }
    }
    // (smallest input vertex, contraction)
    let mut items: Vec<(usize, Contracted)> = towers
        .iter()
        .enumerate()
        .map(|(i, t)| (t.vertices()[0], Contracted::Tower(i)))
        .collect();
    for unit in &p.units {
        let v = unit.vertices[0];
        if in_tower[v] == usize::MAX {
            debug_assert_eq!(
                unit.kind,
                UnitKind::Triangle,
                "every diamond sits in a tower"
            );
            items.push((
                v,
                Contracted::Triangle([unit.vertices[0], unit.vertices[1], unit.vertices[2]]),
            ));
        }
    }
    items.sort_by_key(|&(v, _)| v);
    let mut owner = vec![usize::MAX; g.order()];
    for (x, (_, c)) in items.iter().enumerate() {
        match c {
            Contracted::Triangle(t) => t.iter().for_each(|&v| owner[v] = x),
            Contracted::Tower(i) => towers[*i].vertices().into_iter().for_each(|v| owner[v] = x),
        }
    }
    let mut h = Multigraph::new(items.len());
    let mut ends = Vec::new();
    for (a, b) in g.edges() {
        if owner[a] != owner[b] {
            h.add_edge(owner[a], owner[b]).expect("owners are distinct");
            ends.push((a, b));
        }
    }
    let bridges = biconnected_decomposition(&h).bridges;
    let mut on_bridge = vec![false; items.len()];
    for e in bridges {
        let (x, y) = h.endpoints(e).expect("bridge is an edge");
        on_bridge[x] = true;
        on_bridge[y] = true;
    }
    let color = items
        .iter()
        .enumerate()
        .map(|(x, (_, c))| match c {
            Contracted::Tower(_) => Color::Red,
            Contracted::Triangle(_) if on_bridge[x] => Color::Yellow,
            Contracted::Triangle(_) => Color::Uncolored,
        })
        .collect();
    HGraph {
        h,
        contracted: items.into_iter().map(|(_, c)| c).collect(),
        color,
        towers: towers.to_vec(),
        ends,
        owner,
    }
}

/// A closed walk without repeated vertices in `H`; `edges[i]` joins
/// `vertices[i]` and `vertices[i + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

/// The induced input-graph cycle through two vertices of every unit met by
/// `c` (for a tower, its two base attachments), in the order of `c`.
pub fn lift_cycle(hg: &HGraph, c: &HCycle) -> Vec<usize> {
    let r = c.vertices.len();
    let mut out = Vec::with_capacity(2 * r);
    for i in 0..r {
        let x = c.vertices[i];
        out.push(hg.end_in(c.edges[(i + r - 1) % r], x));
        out.push(hg.end_in(c.edges[i], x));
    }
    out
}

/// A maximal path of colored `H` vertices inside a block, between two
/// uncolored vertices; or a single `H` edge between uncolored vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredPath {
    pub from: usize,
    pub to: usize,
    pub inner: Vec<usize>,
    pub edges: Vec<usize>,
}

/// A block of `H` that is neither a single edge nor a cycle, and the cubic
/// multigraph `b` on its uncolored vertices in which every colored path is
/// one edge. Edge `i` of `b` is `paths[i]`.
#[derive(Clone, Debug)]
pub struct BlockPiece {
    pub vertices: Vec<usize>,
    pub uncolored: Vec<usize>,
    pub b: Multigraph,
    pub paths: Vec<ColoredPath>,
}

impl BlockPiece {
    pub fn colored_edges(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.paths.len()).filter(|&i| !self.paths[i].inner.is_empty())
    }

    /// The `H` cycle obtained by expanding a cycle of `b` given as a start
    /// vertex (local id) and its edge sequence.
    fn expand(&self, start: usize, bedges: &[usize]) -> HCycle {
        let mut c = HCycle {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        let mut at = self.uncolored[start];
        for &e in bedges {
            let p = &self.paths[e];
            c.vertices.push(at);
            if p.from == at {
                c.vertices.extend(&p.inner);
                c.edges.extend(&p.edges);
                at = p.to;
            } else {
                c.vertices.extend(p.inner.iter().rev());
                c.edges.extend(p.edges.iter().rev());
                at = p.from;
            }
        }
        debug_assert_eq!(at, self.uncolored[start]);
        c
    }

    /// Cycles of `b - m` for a perfect matching `m`, expanded into `H`.
    pub fn cycles_avoiding(&self, m: &crate::matching::Matching) -> Vec<HCycle> {
        let n = self.b.order();
        let free: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut es: Vec<usize> = self
                    .b
                    .incident(v)
                    .iter()
                    .copied()
                    .filter(|&e| !m.contains(e))
                    .collect();
                es.sort_unstable();
                es
            })
            .collect();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            debug_assert_eq!(free[s].len(), 2);
            let mut walk = Vec::new();
            let (mut at, mut via) = (s, free[s][0]);
            loop {
                seen[at] = true;
                walk.push(via);
                at = self.b.other_end(via, at);
                if at == s {
                    break;
                }
                via = *free[at]
                    .iter()
                    .find(|&&e| e != via)
                    .expect("degree two after removal");
            }
            out.push(self.expand(s, &walk));
        }
        out
    }
}

/// A component of `H` restricted to colored vertices, with its cycles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CactusPiece {
    pub vertices: Vec<usize>,
    pub cycles: Vec<HCycle>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "index", rename_all = "lowercase")]
pub enum PieceId {
    Block(usize),
    Cactus(usize),
}

/// Blocks `B_i`, cactus pieces, and the tree joining pieces that share a
/// vertex of `H`, listed root first in breadth-first order.
#[derive(Clone, Debug)]
pub struct PieceDecomposition {
    pub hg: HGraph,
    pub blocks: Vec<BlockPiece>,
    pub cactus: Vec<CactusPiece>,
    /// Breadth-first order of the tree from its root, with parents.
    pub order: Vec<(PieceId, Option<PieceId>)>,
    /// For each colored vertex inside a block: (block, edge of `b`).
    pub path_of: Vec<Option<(usize, usize)>>,
    pub cactus_of: Vec<Option<usize>>,
}

pub fn build_pieces(hg: HGraph) -> Result<PieceDecomposition, ClawFreeError> {
    let h = &hg.h;
    let n = h.order();
    let dec = biconnected_decomposition(h);
    let block_of_edge = dec.block_of_edge(h);
    let mut blocks = Vec::new();
    let mut cycle_blocks = Vec::new();
    for (bi, edges) in dec.blocks.iter().enumerate() {
        let vs = dec.block_vertices(h, bi);
        if edges.len() == 1 {
            continue;
        }
        if edges.len() == vs.len() {
            cycle_blocks.push(bi);
            continue;
        }
        blocks.push((bi, vs));
    }
    let mut path_of = vec![None; n];
    let mut pieces = Vec::new();
    for (k, (bi, vs)) in blocks.iter().enumerate() {
        let uncolored: Vec<usize> = vs
            .iter()
            .copied()
            .filter(|&x| hg.color[x] == Color::Uncolored)
            .collect();
        if uncolored.is_empty() {
            return Err(ClawFreeError::Invariant(format!(
                "block {bi} of H has no uncolored vertex"
            )));
        }
        let mut local = vec![usize::MAX; n];
        for (i, &x) in uncolored.iter().enumerate() {
            local[x] = i;
        }
        let in_block = |e: usize| block_of_edge[e] == *bi;
        let mut b = Multigraph::new(uncolored.len());
        let mut paths = Vec::new();
        for &u in &uncolored {
            let mut start: Vec<usize> = h.incident(u).to_vec();
            start.sort_unstable();
            for e in start {
                if !in_block(e) {
                    return Err(ClawFreeError::Invariant(format!(
                        "uncolored H vertex {u} leaves its block"
                    )));
                }
                let mut path = ColoredPath {
                    from: u,
                    to: u,
                    inner: Vec::new(),
                    edges: vec![e],
                };
                let mut at = h.other_end(e, u);
                while hg.color[at] != Color::Uncolored {
                    path.inner.push(at);
                    let last = *path.edges.last().expect("nonempty");
                    let next = h
                        .incident(at)
                        .iter()
                        .copied()
                        .filter(|&f| f != last && in_block(f))
                        .min()
                        .ok_or_else(|| {
                            ClawFreeError::Invariant(format!(
                                "colored H vertex {at} is a block end"
                            ))
                        })?;
                    path.edges.push(next);
                    at = h.other_end(next, at);
                }
                path.to = at;
                let keep = if path.inner.is_empty() {
                    u < at
                } else {
                    path.edges[0] < *path.edges.last().unwrap()
                };
                if !keep {
                    continue;
                }
                if u == at {
                    return Err(ClawFreeError::Invariant(format!(
                        "colored path returns to {u}"
                    )));
                }
                let id = b.add_edge(local[u], local[at]).expect("local ids in range");
                for &x in &path.inner {
                    path_of[x] = Some((k, id));
                }
                paths.push(path);
            }
        }
        debug_assert!(b.is_cubic());
        pieces.push(BlockPiece {
            vertices: vs.clone(),
            uncolored,
            b,
            paths,
        });
    }

    // cactus components on colored vertices
    let mut cactus_of = vec![None; n];
    let mut cactus: Vec<CactusPiece> = Vec::new();
    for s in 0..n {
        if hg.color[s] == Color::Uncolored || cactus_of[s].is_some() {
            continue;
        }
        let id = cactus.len();
        let mut comp = vec![s];
        cactus_of[s] = Some(id);
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &e in h.incident(x) {
                let y = h.other_end(e, x);
                if hg.color[y] != Color::Uncolored && cactus_of[y].is_none() {
                    cactus_of[y] = Some(id);
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        cactus.push(CactusPiece {
            vertices: comp,
            cycles: Vec::new(),
        });
    }
    for bi in cycle_blocks {
        let edges = &dec.blocks[bi];
        let vs = dec.block_vertices(h, bi);
        let s = vs[0];
        let mut c = HCycle {
            vertices: Vec::new(),
            edges: Vec::new(),
        };
        let (mut at, mut via) = (
            s,
            edges
                .iter()
                .copied()
                .find(|&e| h.endpoints(e).map(|(x, y)| x == s || y == s) == Ok(true))
                .expect("cycle through s"),
        );
        loop {
            c.vertices.push(at);
            c.edges.push(via);
            at = h.other_end(via, at);
            if at == s {
                break;
            }
            via = h
                .incident(at)
                .iter()
                .copied()
                .find(|&f| f != via && block_of_edge[f] == bi)
                .expect("cycle vertex has two block edges");
        }
        let owner = cactus_of[s].ok_or_else(|| {
            ClawFreeError::Invariant(format!("cycle block through uncolored {s}"))
        })?;
        if c.vertices.iter().any(|&x| cactus_of[x] != Some(owner)) {
            return Err(ClawFreeError::Invariant(
                "cycle block spans two colored components".into(),
            ));
        }
        cactus[owner].cycles.push(c);
    }

    // piece tree
    let nodes = pieces.len() + cactus.len();
    let node = |p: PieceId| match p {
        PieceId::Block(i) => i,
        PieceId::Cactus(j) => pieces.len() + j,
    };
    let mut adj: Vec<Vec<PieceId>> = vec![Vec::new(); nodes];
    for (i, bp) in pieces.iter().enumerate() {
        let mut touched: Vec<usize> = bp.vertices.iter().filter_map(|&x| cactus_of[x]).collect();
        touched.sort_unstable();
        touched.dedup();
        for j in touched {
            adj[node(PieceId::Block(i))].push(PieceId::Cactus(j));
            adj[node(PieceId::Cactus(j))].push(PieceId::Block(i));
        }
    }
    let root = if pieces.is_empty() {
        PieceId::Cactus(0)
    } else {
        PieceId::Block(0)
    };
    let mut order = Vec::with_capacity(nodes);
    let mut seen = vec![false; nodes];
    let mut queue = VecDeque::from([(root, None)]);
    seen[node(root)] = true;
    while let Some((p, parent)) = queue.pop_front() {
        order.push((p, parent));
        for &q in &adj[node(p)] {
            if !seen[node(q)] {
                seen[node(q)] = true;
                queue.push_back((q, Some(p)));
            }
        }
    }
    let tree_edges: usize = adj.iter().map(Vec::len).sum::<usize>() / 2;
    if order.len() != nodes || tree_edges + 1 != nodes {
        return Err(ClawFreeError::Invariant(format!(
            "piece graph on {nodes} pieces with {tree_edges} links is not a tree"
        )));
    }
    Ok(PieceDecomposition {
        hg,
        blocks: pieces,
        cactus,
        order,
        path_of,
        cactus_of,
    })
}
