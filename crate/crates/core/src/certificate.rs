//! Induced 2-regular vertex sets and their cycle decompositions.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

/// Why a vertex set fails to induce a 2-regular subgraph.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("vertex {vertex} has {degree} neighbors inside the set")]
    Degree { vertex: usize, degree: usize },
    #[error("vertex {0} is not a vertex of the host graph")]
    OutOfRange(usize),
    #[error("listed cycles do not partition the vertex set")]
    Partition,
    #[error("listed cycle starting at {0} is not a cycle of the host graph")]
    NotACycle(usize),
}

/// A vertex set `S` in which every vertex has exactly two neighbors in `S`,
/// together with its decomposition into induced cycles.
///
/// Cycles are written from their smallest vertex toward its smaller cycle
/// neighbor and sorted by that first vertex.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct TwoRegularCertificate {
    vertices: Vec<usize>,
    cycles: Vec<Vec<usize>>,
}

impl TwoRegularCertificate {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Sorted vertex set.
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Re-checks the certificate against `g`: degrees, cycle adjacency and
    /// partition.
    pub fn verify(&self, g: &Graph) -> Result<(), CertificateError> {
        let rebuilt = is_two_regular_induced(g, &self.vertices)?;
        let mut listed: Vec<usize> = self.cycles.iter().flatten().copied().collect();
        listed.sort_unstable();
        if listed != self.vertices {
            return Err(CertificateError::Partition);
        }
        for c in &self.cycles {
            let closed = c.len() >= 3
                && c.iter()
                    .zip(c.iter().cycle().skip(1))
                    .all(|(&a, &b)| g.has_edge(a, b));
            if !closed {
                return Err(CertificateError::NotACycle(c[0]));
            }
        }
        debug_assert_eq!(rebuilt.cycles, self.cycles);
        Ok(())
    }

    /// Maps every vertex through `map` (for example from a subgraph back to
    /// its host) and renormalizes the cycle order.
    pub fn mapped(&self, map: impl Fn(usize) -> usize) -> TwoRegularCertificate {
        let cycles = self
            .cycles
            .iter()
            .map(|c| c.iter().map(|&v| map(v)).collect())
            .collect();
        Self::from_cycles(cycles)
    }

    /// Assembles a certificate from cycles already known to be disjoint
    /// induced cycles. Callers verify against the host graph.
    pub fn from_cycles(cycles: Vec<Vec<usize>>) -> TwoRegularCertificate {
        let mut cycles: Vec<Vec<usize>> = cycles.into_iter().map(normalize_cycle).collect();
        cycles.sort();
        let mut vertices: Vec<usize> = cycles.iter().flatten().copied().collect();
        vertices.sort_unstable();
        TwoRegularCertificate { vertices, cycles }
    }

    /// Disjoint union with another certificate.
    pub fn union(&self, other: &TwoRegularCertificate) -> TwoRegularCertificate {
        Self::from_cycles(self.cycles.iter().chain(&other.cycles).cloned().collect())
    }
}

fn normalize_cycle(mut c: Vec<usize>) -> Vec<usize> {
    if c.is_empty() {
        return c;
    }
    let (i, _) = c
        .iter()
        .enumerate()
        .min_by_key(|&(_, v)| *v)
        .expect("nonempty");
    c.rotate_left(i);
    if c.len() > 2 && c[c.len() - 1] < c[1] {
        c[1..].reverse();
    }
    c
}

/// Checks that `s` induces a 2-regular subgraph of `g` and, on success,
/// decomposes it into cycles. Duplicates in `s` are ignored.
pub fn is_two_regular_induced(
    g: &Graph,
    s: &[usize],
) -> Result<TwoRegularCertificate, CertificateError> {
    let n = g.order();
    let mut inside = vec![false; n];
    let mut vertices = s.to_vec();
    vertices.sort_unstable();
    vertices.dedup();
    for &v in &vertices {
        if v >= n {
            return Err(CertificateError::OutOfRange(v));
        }
        inside[v] = true;
    }
    for &v in &vertices {
        let degree = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
        if degree != 2 {
            return Err(CertificateError::Degree { vertex: v, degree });
        }
    }
    let mut done = vec![false; n];
    let mut cycles = Vec::new();
    for &start in &vertices {
        if done[start] {
            continue;
        }
        let mut cycle = vec![start];
        done[start] = true;
        let mut prev = start;
        let mut cur = *g
            .neighbors(start)
            .iter()
            .find(|&&w| inside[w])
            .expect("degree two");
        while cur != start {
            cycle.push(cur);
            done[cur] = true;
            let next = *g
                .neighbors(cur)
                .iter()
                .find(|&&w| inside[w] && w != prev)
                .expect("degree two");
            prev = cur;
            cur = next;
        }
        cycles.push(normalize_cycle(cycle));
    }
    cycles.sort();
    Ok(TwoRegularCertificate { vertices, cycles })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn five_cycle() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let cert = is_two_regular_induced(&c5, &[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(cert.cycles(), &[vec![0, 1, 2, 3, 4]]);
        cert.verify(&c5).unwrap();
    }

    #[test]
    fn k4_triangle_and_failure() {
        let cert = is_two_regular_induced(&k4(), &[1, 2, 3]).unwrap();
        assert_eq!(cert.cycles(), &[vec![1, 2, 3]]);
        assert_eq!(
            is_two_regular_induced(&k4(), &[0, 1, 2, 3]),
            Err(CertificateError::Degree {
                vertex: 0,
                degree: 3
            })
        );
    }

    #[test]
    fn empty_set_is_valid() {
        let cert = is_two_regular_induced(&k4(), &[]).unwrap();
        assert!(cert.is_empty());
    }

    #[test]
    fn verify_rejects_tampered_cycles() {
        let cert = TwoRegularCertificate {
            vertices: vec![0, 1, 2],
            cycles: vec![vec![0, 1]],
        };
        assert_eq!(cert.verify(&k4()), Err(CertificateError::Partition));
    }
}
