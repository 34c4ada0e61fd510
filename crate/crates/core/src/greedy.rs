//! Greedy lower bound: repeatedly take a shortest cycle of what is left and
//! delete its closed neighborhood, until no cycle remains.

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::certificate::TwoRegularCertificate;
use crate::graph::{shortest_cycle, Graph};

pub type Rational = Ratio<i64>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("bound undefined for maximum degree {0} (needs at least 3)")]
    DegreeTooSmall(usize),
}

/// One round of the greedy procedure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GreedyStep {
    /// The chosen cycle (original vertex ids).
    pub cycle: Vec<usize>,
    /// Closed neighborhood of the cycle in the residual graph, sorted; these
    /// vertices are deleted after the step.
    pub deleted: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    /// Vertices of the final, acyclic residual graph.
    pub residual: Vec<usize>,
}

impl GreedyTrace {
    /// Total cycle mass `l`.
    pub fn cycle_mass(&self) -> usize {
        self.steps.iter().map(|s| s.cycle.len()).sum()
    }

    /// Deleted vertices that lie on no chosen cycle (`N` in the counting
    /// argument).
    pub fn deleted_off_cycle(&self) -> usize {
        self.steps
            .iter()
            .map(|s| s.deleted.len() - s.cycle.len())
            .sum()
    }
}

pub fn greedy_two_regular(g: &Graph) -> (TwoRegularCertificate, GreedyTrace) {
    let n = g.order();
    let mut alive = vec![true; n];
    let mut trace = GreedyTrace::default();
    loop {
        let keep: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        let (residual, map) = g.induced_subgraph(&keep);
        let Some(local) = shortest_cycle(&residual) else {
            trace.residual = keep;
            break;
        };
        let cycle: Vec<usize> = local.iter().map(|&v| map[v]).collect();
        let mut deleted: Vec<usize> = cycle
            .iter()
            .flat_map(|&v| std::iter::once(v).chain(g.neighbors(v).iter().copied()))
            .filter(|&v| alive[v])
            .collect();
        deleted.sort_unstable();
        deleted.dedup();
        for &v in &deleted {
            alive[v] = false;
        }
        trace.steps.push(GreedyStep { cycle, deleted });
    }
    let cert =
        TwoRegularCertificate::from_cycles(trace.steps.iter().map(|s| s.cycle.clone()).collect());
    debug_assert!(cert.verify(g).is_ok());
    (cert, trace)
}

/// `(m - n + 1) / ((Δ - 2)(Δ - 1))` as an exact rational.
pub fn general_bound(n: usize, m: usize, max_degree: usize) -> Result<Rational, BoundError> {
    if max_degree < 3 {
        return Err(BoundError::DegreeTooSmall(max_degree));
    }
    let d = max_degree as i64;
    Ok(Rational::new(m as i64 - n as i64 + 1, (d - 2) * (d - 1)))
}

/// `n / (2(k - 1)) + 1 / ((k - 2)(k - 1))`, the specialization to
/// `k`-regular graphs.
pub fn regular_bound(n: usize, k: usize) -> Result<Rational, BoundError> {
    if k < 3 {
        return Err(BoundError::DegreeTooSmall(k));
    }
    let k = k as i64;
    Ok(Rational::new(n as i64, 2 * (k - 1)) + Rational::new(1, (k - 2) * (k - 1)))
}

/// The bound for `g` itself, with `Δ` taken on the whole graph.
pub fn bound_for(g: &Graph) -> Result<Rational, BoundError> {
    general_bound(g.order(), g.size(), g.max_degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Fixture;

    #[test]
    fn forest_gives_nothing() {
        let t = Graph::from_edges(4, [(0, 1), (1, 2), (1, 3)]).unwrap();
        let (cert, trace) = greedy_two_regular(&t);
        assert!(cert.is_empty());
        assert!(trace.steps.is_empty());
        assert_eq!(trace.residual, vec![0, 1, 2, 3]);
    }

    #[test]
    fn k4_takes_one_triangle() {
        let (cert, trace) = greedy_two_regular(&Fixture::K4.graph());
        assert_eq!(cert.size(), 3);
        assert_eq!(trace.steps.len(), 1);
        assert_eq!(trace.steps[0].deleted, vec![0, 1, 2, 3]);
        assert_eq!(trace.deleted_off_cycle(), 1);
    }

    #[test]
    fn bound_values() {
        assert_eq!(general_bound(4, 6, 3).unwrap(), Rational::new(3, 2));
        assert_eq!(general_bound(7, 6, 3).unwrap(), Rational::from_integer(0));
        assert_eq!(
            general_bound(10, 15, 3).unwrap(),
            Rational::new(10, 4) + Rational::new(1, 2)
        );
        assert_eq!(general_bound(5, 5, 2), Err(BoundError::DegreeTooSmall(2)));
        assert_eq!(regular_bound(4, 3).unwrap(), Rational::new(3, 2));
        assert_eq!(regular_bound(8, 4).unwrap(), Rational::new(3, 2));
        assert_eq!(regular_bound(8, 2), Err(BoundError::DegreeTooSmall(2)));
    }
}
