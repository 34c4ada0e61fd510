use serde::Serialize;

use super::pieces::{lift_cycle, Color, HCycle, PieceDecomposition, PieceId};
use super::ClawFreeError;
use crate::greedy::Rational;
use crate::matching::{
    maximum_matching, perfect_matching_avoiding, perfect_matching_containing, Matching,
};

/// How a vertex of a cactus piece is counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// Yellow, on the colored path of the parent block.
    C1,
    /// Red, on the colored path of the parent block.
    C2,
    /// Yellow, in no block and on no cycle.
    C3,
    /// Red, in no block and on no cycle.
    C4,
    /// On a cycle with exactly one yellow vertex.
    C5a,
    /// On a cycle with zero or at least two yellow vertices.
    C5b,
    /// On a child path with at least two yellow vertices.
    C6a,
    /// On a child path with one yellow and at least one red vertex.
    C6b,
    /// The single vertex of a child path.
    C6c,
}

/// Per-vertex contributions `a(v) = |C ∩ h(v)| - 13/20 n(h(v))` of one
/// cactus piece under both sides of its forest 2-coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ledger {
    pub vertices: Vec<usize>,
    pub cases: Vec<Case>,
    /// Side of the forest coloring, `None` for cycle vertices.
    pub side: Vec<Option<u8>>,
    /// Contribution of each vertex if side 0 / side 1 is chosen.
    pub a: [Vec<Rational>; 2],
    pub chosen: u8,
    /// True when the piece has no yellow vertex.
    pub yellow_free: bool,
}

impl Ledger {
    pub fn total(&self, side: u8) -> Rational {
        self.a[side as usize].iter().sum()
    }

    pub fn chosen_total(&self) -> Rational {
        self.total(self.chosen)
    }
}

/// Matching status of the colored edge joining a cactus piece to a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParentLink {
    pub block: usize,
    pub edge: usize,
    pub matched: bool,
}

/// Computes the ledger of cactus piece `j`, given the state of its parent
/// block's colored edge (`None` at the root).
pub fn contribution_ledger(
    d: &PieceDecomposition,
    j: usize,
    parent: Option<ParentLink>,
) -> Result<Ledger, ClawFreeError> {
    let hg = &d.hg;
    let piece = &d.cactus[j];
    let vs = &piece.vertices;
    let idx = |x: usize| vs.binary_search(&x).expect("vertex of the piece");
    let mut cases: Vec<Option<Case>> = vec![None; vs.len()];
    for c in &piece.cycles {
        let yellow = c
            .vertices
            .iter()
            .filter(|&&x| hg.color[x] == Color::Yellow)
            .count();
        let case = if yellow == 1 { Case::C5a } else { Case::C5b };
        for &x in &c.vertices {
            cases[idx(x)] = Some(case);
        }
    }
    // child paths grouped by (block, edge)
    let mut child_paths: Vec<(usize, usize)> = Vec::new();
    for (i, &x) in vs.iter().enumerate() {
        let Some((blk, e)) = d.path_of[x] else {
            continue;
        };
        if let Some(link) = parent {
            if link.block == blk {
                if link.edge != e {
                    return Err(ClawFreeError::Invariant(format!(
                        "piece {j} meets its parent block twice"
                    )));
                }
                cases[i] = Some(if hg.color[x] == Color::Yellow {
                    Case::C1
                } else {
                    Case::C2
                });
                continue;
            }
        }
        if !child_paths.contains(&(blk, e)) {
            if child_paths.iter().any(|&(b, _)| b == blk) {
                return Err(ClawFreeError::Invariant(format!(
                    "piece {j} meets block {blk} twice"
                )));
            }
            child_paths.push((blk, e));
        }
    }
    for &(blk, e) in &child_paths {
        let inner = &d.blocks[blk].paths[e].inner;
        let yellow = inner
            .iter()
            .filter(|&&x| hg.color[x] == Color::Yellow)
            .count();
        let red = inner.len() - yellow;
        let case = match (yellow, red) {
            (y, _) if y >= 2 => Case::C6a,
            (1, r) if r >= 1 => Case::C6b,
            (1, 0) => Case::C6c,
            _ => {
                return Err(ClawFreeError::Invariant(format!(
                    "child path of block {blk} has {yellow} yellow and {red} red vertices"
                )))
            }
        };
        for &x in inner {
            cases[idx(x)] = Some(case);
        }
    }
    let cases: Vec<Case> = vs
        .iter()
        .zip(cases)
        .map(|(&x, c)| {
            c.unwrap_or(if hg.color[x] == Color::Yellow {
                Case::C3
            } else {
                Case::C4
            })
        })
        .collect();

    // 2-color the vertices off the cycles, breadth first from the smallest
    let mut side: Vec<Option<u8>> = vec![None; vs.len()];
    for s in 0..vs.len() {
        if side[s].is_some() || matches!(cases[s], Case::C5a | Case::C5b) {
            continue;
        }
        side[s] = Some(0);
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(i) = queue.pop_front() {
            for &e in hg.h.incident(vs[i]) {
                let y = hg.h.other_end(e, vs[i]);
                let Ok(k) = vs.binary_search(&y) else {
                    continue;
                };
                if matches!(cases[k], Case::C5a | Case::C5b) {
                    continue;
                }
                match side[k] {
                    None => {
                        side[k] = Some(1 - side[i].expect("colored"));
                        queue.push_back(k);
                    }
                    Some(c) if c == side[i].expect("colored") => {
                        return Err(ClawFreeError::Invariant(format!(
                            "forest of piece {j} is not bipartite"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
    }

    let parent_lifted = parent.is_some_and(|l| !l.matched);
    let mut a: [Vec<Rational>; 2] = [Vec::new(), Vec::new()];
    for (i, &x) in vs.iter().enumerate() {
        let red = hg.color[x] == Color::Red;
        let tower = if red { 5 } else { 0 };
        let share = Rational::new(13 * hg.weight(x) as i64, 20);
        for p in 0..2u8 {
            let mine = side[i] == Some(p);
            let lifted = match cases[i] {
                Case::C5a | Case::C5b | Case::C6a | Case::C6b => true,
                Case::C1 | Case::C2 => parent_lifted,
                Case::C6c => !mine,
                Case::C3 | Case::C4 => false,
            };
            let count = if lifted {
                2
            } else if mine {
                3
            } else {
                0
            };
            a[p as usize].push(Rational::from_integer(tower + count) - share);
        }
    }
    let yellow_free = vs.iter().all(|&x| hg.color[x] != Color::Yellow);
    let mut ledger = Ledger {
        vertices: vs.clone(),
        cases,
        side,
        a,
        chosen: 0,
        yellow_free,
    };
    if ledger.total(1) > ledger.total(0) {
        ledger.chosen = 1;
    }
    Ok(ledger)
}

#[derive(Clone, Debug, Serialize)]
pub struct PieceReport {
    pub piece: PieceId,
    /// `H` vertices in the piece.
    pub order: usize,
    /// Input vertices represented by the piece.
    pub weight: usize,
    /// Input vertices of the piece that end up in the solution.
    pub covered: usize,
    /// Chosen ledger total of a cactus piece, as a reduced fraction.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ledger: Option<String>,
}

/// Vertex set of the main construction plus per-piece accounting.
pub struct Assembly {
    pub set: Vec<usize>,
    pub lifted: Vec<Vec<usize>>,
    pub ledgers: Vec<Ledger>,
    pub reports: Vec<PieceReport>,
}

pub fn assemble(d: &PieceDecomposition) -> Result<Assembly, ClawFreeError> {
    let hg = &d.hg;
    let n = hg.h.order();
    let mut on_cycle = vec![false; n];
    let mut independent = vec![false; n];
    let mut cycles: Vec<HCycle> = Vec::new();
    // required status of each block's link edge: (edge, must be matched)
    let mut constraint: Vec<Option<(usize, bool)>> = vec![None; d.blocks.len()];
    let mut matchings: Vec<Option<Matching>> = vec![None; d.blocks.len()];
    let mut ledgers = Vec::new();
    let mut ledger_of = vec![None; d.cactus.len()];

    for &(piece, parent) in &d.order {
        match piece {
            PieceId::Block(i) => {
                let bp = &d.blocks[i];
                let m = match constraint[i] {
                    None => Some(maximum_matching(&bp.b)).filter(|m| m.is_perfect(&bp.b)),
                    Some((e, true)) => perfect_matching_containing(&bp.b, e)?,
                    Some((e, false)) => perfect_matching_avoiding(&bp.b, e)?,
                }
                .ok_or_else(|| {
                    ClawFreeError::Invariant(format!("block {i} has no suitable perfect matching"))
                })?;
                for c in bp.cycles_avoiding(&m) {
                    for &x in &c.vertices {
                        on_cycle[x] = true;
                    }
                    cycles.push(c);
                }
                matchings[i] = Some(m);
            }
            PieceId::Cactus(j) => {
                let link = match parent {
                    Some(PieceId::Block(i)) => {
                        let e = d.cactus[j]
                            .vertices
                            .iter()
                            .find_map(|&x| d.path_of[x].filter(|&(b, _)| b == i))
                            .map(|(_, e)| e)
                            .ok_or_else(|| {
                                ClawFreeError::Invariant(format!(
                                    "piece {j} shares nothing with its parent"
                                ))
                            })?;
                        let matched = matchings[i]
                            .as_ref()
                            .expect("parent processed first")
                            .contains(e);
                        Some(ParentLink {
                            block: i,
                            edge: e,
                            matched,
                        })
                    }
                    None => None,
                    Some(PieceId::Cactus(_)) => unreachable!("cactus pieces only border blocks"),
                };
                let ledger = contribution_ledger(d, j, link)?;
                for c in &d.cactus[j].cycles {
                    for &x in &c.vertices {
                        on_cycle[x] = true;
                    }
                    cycles.push(c.clone());
                }
                for (k, &x) in ledger.vertices.iter().enumerate() {
                    let mine = ledger.side[k] == Some(ledger.chosen);
                    match ledger.cases[k] {
                        Case::C6a | Case::C6b | Case::C6c => {
                            let (blk, e) = d.path_of[x].expect("child path vertex");
                            let want = ledger.cases[k] == Case::C6c && mine;
                            constraint[blk] = Some((e, want));
                            if want {
                                independent[x] = true;
                            }
                        }
                        Case::C1 | Case::C2 if link.is_some_and(|l| !l.matched) => {}
                        Case::C5a | Case::C5b => {}
                        _ => independent[x] = mine,
                    }
                }
                ledger_of[j] = Some(ledgers.len());
                ledgers.push(ledger);
            }
        }
    }

    let mut set: Vec<usize> = Vec::new();
    let mut lifted = Vec::new();
    for c in &cycles {
        let l = lift_cycle(hg, c);
        set.extend(&l);
        lifted.push(l);
    }
    for x in 0..n {
        if independent[x] {
            if on_cycle[x] {
                return Err(ClawFreeError::Invariant(format!(
                    "H vertex {x} is both lifted and taken whole"
                )));
            }
            set.extend(hg.triangle_of(x));
        }
    }
    for t in &hg.towers {
        set.extend(t.five_cycle());
    }
    set.sort_unstable();
    if set.windows(2).any(|w| w[0] == w[1]) {
        return Err(ClawFreeError::Invariant(
            "pieces overlap in the input graph".into(),
        ));
    }
    let mut in_set = vec![false; hg.owner_len()];
    for &v in &set {
        in_set[v] = true;
    }
    let covered_by = |vs: &[usize]| -> (usize, usize) {
        let mut weight = 0;
        let mut covered = 0;
        for &x in vs {
            weight += hg.weight(x);
            covered += hg.members(x).iter().filter(|&&v| in_set[v]).count();
        }
        (weight, covered)
    };
    let reports = d
        .order
        .iter()
        .map(|&(piece, _)| {
            let (vs, ledger) = match piece {
                PieceId::Block(i) => (&d.blocks[i].uncolored, None),
                PieceId::Cactus(j) => (
                    &d.cactus[j].vertices,
                    ledger_of[j].map(|l| ledgers[l].chosen_total().to_string()),
                ),
            };
            let (weight, covered) = covered_by(vs);
            PieceReport {
                piece,
                order: vs.len(),
                weight,
                covered,
                ledger,
            }
        })
        .collect();
    Ok(Assembly {
        set,
        lifted,
        ledgers,
        reports,
    })
}
