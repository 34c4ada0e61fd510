//! Exact induced cycle number by branch and bound.
//!
//! Each connected component is searched separately. Vertices carry one of
//! three labels (in, out, undecided). Propagation enforces that an `in`
//! vertex ends with exactly two `in` neighbors; a partial labeling is pruned
//! once `|in| + |undecided|` cannot beat the incumbent, which starts from the
//! greedy solution.

use std::time::{Duration, Instant};

use serde::Serialize;
use thiserror::Error;

use crate::certificate::TwoRegularCertificate;
use crate::graph::Graph;
use crate::greedy::greedy_two_regular;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("brute-force oracle supports at most {max} vertices, got {got}")]
    TooLarge { max: usize, got: usize },
    #[error("search limits must be positive")]
    NonPositiveLimit,
}

/// Optional node and wall-clock limits for [`max_induced_two_regular`].
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct SearchBudget {
    node_limit: Option<u64>,
    time_limit: Option<Duration>,
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn new(node_limit: Option<u64>, time_limit_secs: Option<f64>) -> Result<Self, ExactError> {
        if node_limit == Some(0) || time_limit_secs.is_some_and(|t| t.is_nan() || t <= 0.0) {
            return Err(ExactError::NonPositiveLimit);
        }
        Ok(SearchBudget {
            node_limit,
            time_limit: time_limit_secs.map(Duration::from_secs_f64),
        })
    }

    pub fn node_limit(&self) -> Option<u64> {
        self.node_limit
    }

    pub fn time_limit(&self) -> Option<Duration> {
        self.time_limit
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactResult {
    pub certificate: TwoRegularCertificate,
    /// True only when every component was searched to completion.
    pub optimal: bool,
    pub nodes_explored: u64,
}

impl ExactResult {
    pub fn size(&self) -> usize {
        self.certificate.size()
    }
}

/// Maximum induced 2-regular subgraph of `g`, within `budget`.
///
/// The returned certificate is valid for `g` on every path; when the budget
/// runs out it is the best set found and `optimal` is false.
pub fn max_induced_two_regular(g: &Graph, budget: SearchBudget) -> ExactResult {
    let deadline = budget.time_limit.map(|d| Instant::now() + d);
    let mut nodes = 0u64;
    let mut optimal = true;
    let mut cycles = Vec::new();
    for comp in g.connected_components() {
        if comp.len() < 3 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&comp);
        let mut search = Search::new(
            &sub,
            budget.node_limit.map(|l| l.saturating_sub(nodes)),
            deadline,
        );
        let done = search.run();
        nodes += search.nodes;
        optimal &= done;
        let cert = crate::is_two_regular_induced(&sub, &search.best)
            .expect("search only records 2-regular sets");
        cycles.extend(cert.mapped(|v| map[v]).cycles().iter().cloned());
    }
    let certificate = TwoRegularCertificate::from_cycles(cycles);
    debug_assert!(certificate.verify(g).is_ok());
    ExactResult {
        certificate,
        optimal,
        nodes_explored: nodes,
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Label {
    Undecided,
    In,
    Out,
}

struct Search<'a> {
    g: &'a Graph,
    label: Vec<Label>,
    in_deg: Vec<usize>,
    und_deg: Vec<usize>,
    in_count: usize,
    und_count: usize,
    trail: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, node_limit: Option<u64>, deadline: Option<Instant>) -> Self {
        let n = g.order();
        let (greedy, _) = greedy_two_regular(g);
        Search {
            g,
            label: vec![Label::Undecided; n],
            in_deg: vec![0; n],
            und_deg: (0..n).map(|v| g.degree(v)).collect(),
            in_count: 0,
            und_count: n,
            trail: Vec::with_capacity(n),
            best: greedy.vertices().to_vec(),
            nodes: 0,
            node_limit,
            deadline,
            aborted: false,
        }
    }

    /// Returns true if the search completed.
    fn run(&mut self) -> bool {
        let all: Vec<usize> = (0..self.g.order()).collect();
        if self.propagate(all) {
            self.branch();
        }
        !self.aborted
    }

    fn assign(&mut self, v: usize, label: Label) {
        debug_assert_eq!(self.label[v], Label::Undecided);
        self.label[v] = label;
        self.und_count -= 1;
        if label == Label::In {
            self.in_count += 1;
        }
        for &w in self.g.neighbors(v) {
            self.und_deg[w] -= 1;
            if label == Label::In {
                self.in_deg[w] += 1;
            }
        }
        self.trail.push(v);
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().expect("trail above mark");
            let label = self.label[v];
            for &w in self.g.neighbors(v) {
                self.und_deg[w] += 1;
                if label == Label::In {
                    self.in_deg[w] -= 1;
                }
            }
            if label == Label::In {
                self.in_count -= 1;
            }
            self.und_count += 1;
            self.label[v] = Label::Undecided;
        }
    }

    /// Applies forced labels until a fixpoint; false on contradiction.
    fn propagate(&mut self, mut work: Vec<usize>) -> bool {
        while let Some(x) = work.pop() {
            let (i, u) = (self.in_deg[x], self.und_deg[x]);
            let forced = match self.label[x] {
                Label::In => {
                    if i > 2 || i + u < 2 {
                        return false;
                    }
                    if u > 0 && i == 2 {
                        Some(Label::Out)
                    } else if u > 0 && i + u == 2 {
                        Some(Label::In)
                    } else {
                        None
                    }
                }
                Label::Undecided => {
                    if i > 2 || i + u < 2 {
                        self.assign(x, Label::Out);
                        work.extend_from_slice(self.g.neighbors(x));
                    }
                    None
                }
                Label::Out => None,
            };
            if let Some(label) = forced {
                let targets: Vec<usize> = self
                    .g
                    .neighbors(x)
                    .iter()
                    .copied()
                    .filter(|&w| self.label[w] == Label::Undecided)
                    .collect();
                for w in targets {
                    self.assign(w, label);
                    work.push(w);
                    work.extend_from_slice(self.g.neighbors(w));
                }
            }
        }
        true
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if self.node_limit.is_some_and(|l| self.nodes >= l) {
            self.aborted = true;
        } else if self.nodes.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn branch(&mut self) {
        if self.out_of_budget() {
            return;
        }
        self.nodes += 1;
        if self.in_count + self.und_count <= self.best.len() {
            return;
        }
        let pick = (0..self.g.order())
            .filter(|&v| self.label[v] == Label::Undecided)
            .max_by_key(|&v| (self.in_deg[v], std::cmp::Reverse(v)));
        let Some(v) = pick else {
            // Fully labeled and consistent: every `in` vertex has in-degree 2.
            self.best = (0..self.g.order())
                .filter(|&v| self.label[v] == Label::In)
                .collect();
            return;
        };
        for label in [Label::In, Label::Out] {
            let mark = self.trail.len();
            self.assign(v, label);
            let mut work = vec![v];
            work.extend_from_slice(self.g.neighbors(v));
            if self.propagate(work) {
                self.branch();
            }
            self.undo_to(mark);
            if self.aborted {
                return;
            }
        }
    }
}

/// Largest `|S|` over all `2^n` vertex subsets that induce a 2-regular
/// subgraph; 0 when none does. Limited to 20 vertices.
pub fn brute_force_oracle(g: &Graph) -> Result<usize, ExactError> {
    const MAX: usize = 20;
    let n = g.order();
    if n > MAX {
        return Err(ExactError::TooLarge { max: MAX, got: n });
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();
    let mut best = 0;
    for s in 1u32..(1u32 << n) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut rest = s;
        let mut ok = true;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (adj[v] & s).count_ones() != 2 {
                ok = false;
                break;
            }
        }
        if ok {
            best = size;
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, diamond_necklace, Fixture};

    fn exact(g: &Graph) -> usize {
        let r = max_induced_two_regular(g, SearchBudget::unlimited());
        assert!(r.optimal);
        r.certificate.verify(g).unwrap();
        r.size()
    }

    #[test]
    fn small_fixtures() {
        assert_eq!(exact(&Fixture::K4.graph()), 3);
        assert_eq!(exact(&Fixture::Prism.graph()), 4);
        assert_eq!(exact(&complete_bipartite(4)), 4);
        assert_eq!(exact(&Fixture::HalfCubic.graph()), 6);
        assert_eq!(exact(&diamond_necklace(3).unwrap().0), 9);
    }

    #[test]
    fn forest_is_optimal_zero() {
        let t = Graph::from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        let r = max_induced_two_regular(&t, SearchBudget::unlimited());
        assert!(r.optimal && r.certificate.is_empty());
        assert_eq!(brute_force_oracle(&t), Ok(0));
    }

    #[test]
    fn oracle_basics() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert_eq!(brute_force_oracle(&c5), Ok(5));
        assert_eq!(brute_force_oracle(&complete_bipartite(4)), Ok(4));
        assert_eq!(
            brute_force_oracle(&Graph::empty(21)),
            Err(ExactError::TooLarge { max: 20, got: 21 })
        );
    }

    #[test]
    fn budget_exhaustion_keeps_valid_certificate() {
        let g = Fixture::ThreeTowers.graph();
        let r = max_induced_two_regular(&g, SearchBudget::new(Some(1), None).unwrap());
        assert!(!r.optimal);
        r.certificate.verify(&g).unwrap();
        assert!(r.size() > 0);
        assert!(SearchBudget::new(Some(0), None).is_err());
        assert!(SearchBudget::new(None, Some(-1.0)).is_err());
    }

    #[test]
    fn components_add_up() {
        let g = Fixture::K4.graph().disjoint_union(&Fixture::Prism.graph());
        assert_eq!(exact(&g), 7);
    }
}
