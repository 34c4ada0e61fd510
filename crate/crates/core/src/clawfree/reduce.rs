use serde::Serialize;

use super::partition::{find_towers, triangle_diamond_partition, Tower, UnitKind, UnitPartition};
use super::ClawFreeError;
use crate::families::Fixture;
use crate::graph::{find_isomorphism, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TerminalKind {
    K4,
    Prism,
    Necklace,
    TwoTowers,
    ThreeTowers,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Terminal {
    pub kind: TerminalKind,
    /// Vertex set of an induced 2-regular subgraph, sorted.
    pub set: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SurgeryKind {
    /// A diamond with neighbors in two different units is removed.
    A,
    /// Two triangles joined by two edges with no common neighboring unit.
    C,
    /// Two towers sharing a base triangle, plus the triangle below it.
    D,
}

/// How to turn a set of the smaller graph into one of the larger graph.
/// All ids are vertices of the larger (parent) graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "surgery")]
pub enum Extension {
    A {
        diamond: [usize; 4],
        v1: usize,
        v2: usize,
    },
    C {
        u: [usize; 2],
        w: [usize; 2],
        x: [usize; 2],
        v: [usize; 2],
    },
    D {
        cycles: [[usize; 5]; 2],
        base: [usize; 3],
        r: [usize; 2],
        s: [usize; 2],
    },
}

impl Extension {
    pub fn kind(&self) -> SurgeryKind {
        match self {
            Extension::A { .. } => SurgeryKind::A,
            Extension::C { .. } => SurgeryKind::C,
            Extension::D { .. } => SurgeryKind::D,
        }
    }

    /// Least number of vertices added by [`Surgery::extend`].
    pub fn gain(&self) -> usize {
        match self {
            Extension::A { .. } => 3,
            Extension::C { .. } => 4,
            Extension::D { .. } => 13,
        }
    }
}

/// One graph surgery: the child graph is the parent minus `deleted` plus the
/// edge `added`; `child_to_parent[i]` is the parent id of child vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Surgery {
    pub deleted: Vec<usize>,
    pub added: (usize, usize),
    pub child_to_parent: Vec<usize>,
    pub extension: Extension,
}

impl Surgery {
    pub fn kind(&self) -> SurgeryKind {
        self.extension.kind()
    }

    /// Parent-graph set built from an induced 2-regular set of the child.
    pub fn extend(&self, child_set: &[usize]) -> Vec<usize> {
        let mut s: Vec<usize> = child_set.iter().map(|&v| self.child_to_parent[v]).collect();
        s.sort_unstable();
        let has = |v: usize| s.binary_search(&v).is_ok();
        let extra: Vec<usize> = match &self.extension {
            Extension::A {
                diamond: [a, b, c, d],
                v1,
                v2,
            } => {
                if has(*v1) && has(*v2) {
                    vec![*a, *c, *b]
                } else if !has(*v1) {
                    vec![*a, *c, *d]
                } else {
                    vec![*b, *c, *d]
                }
            }
            Extension::C { u, w, x, v } => {
                if has(v[0]) && has(v[1]) {
                    vec![u[0], w[0], w[1], u[1]]
                } else {
                    vec![w[0], w[1], x[0], x[1]]
                }
            }
            Extension::D {
                cycles,
                base,
                r,
                s: ss,
            } => {
                let mut e: Vec<usize> = cycles.iter().flatten().chain(base).copied().collect();
                if has(ss[0]) && has(ss[1]) {
                    e.extend(r);
                }
                e
            }
        };
        s.extend(extra);
        s.sort_unstable();
        s
    }
}

/// Surgeries in the order they were applied to the input graph.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct ExpansionLog {
    pub surgeries: Vec<Surgery>,
}

impl ExpansionLog {
    /// Maps a set of the last child graph back to the first parent.
    pub fn replay(&self, set: &[usize]) -> Vec<usize> {
        self.surgeries
            .iter()
            .rev()
            .fold(set.to_vec(), |s, surgery| surgery.extend(&s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReduceOutcome {
    Terminal(Terminal),
    Surgery {
        child: Graph,
        surgery: Surgery,
    },
    /// Every reduction hypothesis holds; the main construction applies.
    Irreducible {
        partition: UnitPartition,
        towers: Vec<Tower>,
    },
}

/// One step of the reduction on a connected claw-free cubic graph.
pub fn reduce_step(g: &Graph) -> Result<ReduceOutcome, ClawFreeError> {
    if g.order() == 4 {
        super::partition::check_cubic_clawfree(g)?;
        return Ok(ReduceOutcome::Terminal(Terminal {
            kind: TerminalKind::K4,
            set: vec![0, 1, 2],
        }));
    }
    let p = triangle_diamond_partition(g)?;
    if p.triangle_count() == 0 {
        return Ok(ReduceOutcome::Terminal(Terminal {
            kind: TerminalKind::Necklace,
            set: necklace_set(g, &p),
        }));
    }
    if let Some(step) = claim_a(g, &p) {
        return Ok(step);
    }
    if let Some(step) = claim_b(g, &p) {
        return Ok(step);
    }
    if let Some(step) = claim_c(g, &p) {
        return Ok(step);
    }
    let towers = find_towers(g, &p);
    if let Some(step) = claim_d(g, &p, &towers)? {
        return Ok(step);
    }
    Ok(ReduceOutcome::Irreducible {
        partition: p,
        towers,
    })
}

/// Walks the ring of diamonds and takes, in each, the triangle through the
/// vertex that leads on to the next diamond.
fn necklace_set(g: &Graph, p: &UnitPartition) -> Vec<usize> {
    let mut set = Vec::with_capacity(3 * p.units.len());
    let start = p.units[0].vertices[0];
    let mut entry = start;
    loop {
        let v = &p.units[p.unit_of[entry]].vertices;
        let exit = if v[0] == entry { v[1] } else { v[0] };
        set.extend([exit, v[2], v[3]]);
        entry = p.outside_neighbor(g, exit);
        if entry == start {
            break;
        }
    }
    set.sort_unstable();
    set
}

/// Deletes `deleted`, adds `added`, and renumbers the survivors in order.
fn cut(g: &Graph, deleted: &[usize], added: (usize, usize)) -> (Graph, Vec<usize>) {
    let mut gone = vec![false; g.order()];
    for &v in deleted {
        gone[v] = true;
    }
    let keep: Vec<usize> = (0..g.order()).filter(|&v| !gone[v]).collect();
    let mut new_id = vec![usize::MAX; g.order()];
    for (i, &v) in keep.iter().enumerate() {
        new_id[v] = i;
    }
    let edges = g
        .edges()
        .filter(|&(x, y)| !gone[x] && !gone[y])
        .map(|(x, y)| (new_id[x], new_id[y]))
        .chain(std::iter::once((new_id[added.0], new_id[added.1])));
    let child = Graph::from_edges(keep.len(), edges).expect("surgery keeps the graph simple");
    (child, keep)
}

fn surgery(
    g: &Graph,
    mut deleted: Vec<usize>,
    added: (usize, usize),
    extension: Extension,
) -> ReduceOutcome {
    deleted.sort_unstable();
    debug_assert!(!g.has_edge(added.0, added.1));
    let (child, child_to_parent) = cut(g, &deleted, added);
    ReduceOutcome::Surgery {
        child,
        surgery: Surgery {
            deleted,
            added,
            child_to_parent,
            extension,
        },
    }
}

fn claim_a(g: &Graph, p: &UnitPartition) -> Option<ReduceOutcome> {
    for unit in &p.units {
        if unit.kind != UnitKind::Diamond {
            continue;
        }
        let [a, b, c, d] = [
            unit.vertices[0],
            unit.vertices[1],
            unit.vertices[2],
            unit.vertices[3],
        ];
        let (v1, v2) = (p.outside_neighbor(g, a), p.outside_neighbor(g, b));
        if p.unit_of[v1] != p.unit_of[v2] {
            return Some(surgery(
                g,
                vec![a, b, c, d],
                (v1, v2),
                Extension::A {
                    diamond: [a, b, c, d],
                    v1,
                    v2,
                },
            ));
        }
    }
    None
}

fn claim_b(g: &Graph, p: &UnitPartition) -> Option<ReduceOutcome> {
    let x = p
        .adjacency
        .edges()
        .find(|&(_, x, y)| p.edges_between(x, y) == 3)
        .map(|(_, x, _)| x)?;
    // x1 x2 y2 y1 with x_i ~ y_i
    let xs = &p.units[x].vertices;
    let (x1, x2) = (xs[0], xs[1]);
    let (y1, y2) = (p.outside_neighbor(g, x1), p.outside_neighbor(g, x2));
    let mut set = vec![x1, x2, y1, y2];
    set.sort_unstable();
    Some(ReduceOutcome::Terminal(Terminal {
        kind: TerminalKind::Prism,
        set,
    }))
}

fn claim_c(g: &Graph, p: &UnitPartition) -> Option<ReduceOutcome> {
    for (_, i, j) in p.adjacency.edges() {
        if p.units[i].kind != UnitKind::Triangle
            || p.units[j].kind != UnitKind::Triangle
            || p.edges_between(i, j) != 2
        {
            continue;
        }
        let lone = |own: usize, other: usize| {
            *p.units[own]
                .vertices
                .iter()
                .find(|&&x| p.unit_of[p.outside_neighbor(g, x)] != other)
                .expect("two of three vertices face the other triangle")
        };
        let (u1, u2) = (lone(i, j), lone(j, i));
        let (v1, v2) = (p.outside_neighbor(g, u1), p.outside_neighbor(g, u2));
        if p.unit_of[v1] == p.unit_of[v2] {
            continue;
        }
        let mut rest: Vec<usize> = p.units[i]
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != u1)
            .collect();
        rest.sort_unstable();
        let (w1, x1) = (rest[0], rest[1]);
        let (w2, x2) = (p.outside_neighbor(g, w1), p.outside_neighbor(g, x1));
        let mut deleted = p.units[i].vertices.clone();
        deleted.extend(&p.units[j].vertices);
        return Some(surgery(
            g,
            deleted,
            (v1, v2),
            Extension::C {
                u: [u1, u2],
                w: [w1, w2],
                x: [x1, x2],
                v: [v1, v2],
            },
        ));
    }
    None
}

fn claim_d(
    g: &Graph,
    p: &UnitPartition,
    towers: &[Tower],
) -> Result<Option<ReduceOutcome>, ClawFreeError> {
    if towers
        .iter()
        .any(|t| towers.iter().any(|o| o.middle_unit == t.base_unit))
    {
        let mut set: Vec<usize> = towers.iter().flat_map(|t| t.five_cycle()).collect();
        set.sort_unstable();
        return terminal_match(g, Fixture::TwoTowers, TerminalKind::TwoTowers, set).map(Some);
    }
    let mut by_base: Vec<Vec<&Tower>> = vec![Vec::new(); p.units.len()];
    for t in towers {
        by_base[t.base_unit].push(t);
    }
    if let Some(group) = by_base.iter().find(|grp| grp.len() >= 3) {
        let mut set: Vec<usize> = group.iter().flat_map(|t| t.five_cycle()).collect();
        set.extend(&p.units[group[0].base_unit].vertices);
        set.sort_unstable();
        return terminal_match(g, Fixture::ThreeTowers, TerminalKind::ThreeTowers, set).map(Some);
    }
    let Some(pair) = by_base.iter().find(|grp| grp.len() == 2) else {
        return Ok(None);
    };
    let (g1, g2) = (pair[0], pair[1]);
    let base = &p.units[g1.base_unit].vertices;
    let v = *base
        .iter()
        .find(|&&x| x != g1.base[0] && x != g2.base[0])
        .expect("two towers use two base vertices");
    let r1 = p.outside_neighbor(g, v);
    let star = p.unit_of[r1];
    if p.units[star].kind != UnitKind::Triangle {
        return Err(ClawFreeError::Invariant(format!(
            "unit below shared base at {v} is not a triangle"
        )));
    }
    let mut r: Vec<usize> = p.units[star]
        .vertices
        .iter()
        .copied()
        .filter(|&x| x != r1)
        .collect();
    r.sort_unstable();
    let s = [p.outside_neighbor(g, r[0]), p.outside_neighbor(g, r[1])];
    if p.unit_of[s[0]] == p.unit_of[s[1]] {
        return Err(ClawFreeError::Invariant(format!(
            "triangle at {r1} is joined twice to one unit after the two-edge reduction"
        )));
    }
    let mut deleted = g1.vertices();
    deleted.extend(g2.diamond.iter().chain(&g2.middle));
    deleted.extend(&p.units[star].vertices);
    let base_arr = [base[0], base[1], base[2]];
    Ok(Some(surgery(
        g,
        deleted,
        (s[0], s[1]),
        Extension::D {
            cycles: [g1.five_cycle(), g2.five_cycle()],
            base: base_arr,
            r: [r[0], r[1]],
            s,
        },
    )))
}

/// Confirms that a configuration the reduction treats as fully determined
/// really is the stored graph.
fn terminal_match(
    g: &Graph,
    fixture: Fixture,
    kind: TerminalKind,
    set: Vec<usize>,
) -> Result<ReduceOutcome, ClawFreeError> {
    let reference = fixture.graph();
    if g.order() != reference.order() || find_isomorphism(g, &reference).is_none() {
        return Err(ClawFreeError::Invariant(format!(
            "tower configuration of order {} does not match {fixture}",
            g.order()
        )));
    }
    Ok(ReduceOutcome::Terminal(Terminal { kind, set }))
}
