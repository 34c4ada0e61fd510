use serde::Serialize;

use super::ClawFreeError;
use crate::graph::{Graph, Multigraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum UnitKind {
    Triangle,
    Diamond,
}

/// One set of the triangle-diamond partition. Diamond vertices are stored as
/// `[a, b, c, d]` with `ab` the missing edge, `a < b`, `c < d`; triangle
/// vertices are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Unit {
    pub kind: UnitKind,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitPartition {
    /// Ordered by smallest vertex.
    pub units: Vec<Unit>,
    pub unit_of: Vec<usize>,
    /// One edge per graph edge joining two different units.
    pub adjacency: Multigraph,
}

impl UnitPartition {
    pub fn triangle_count(&self) -> usize {
        self.units
            .iter()
            .filter(|u| u.kind == UnitKind::Triangle)
            .count()
    }

    pub fn diamond_count(&self) -> usize {
        self.units.len() - self.triangle_count()
    }

    /// Neighbor of `v` outside its own unit (each vertex has exactly one).
    pub fn outside_neighbor(&self, g: &Graph, v: usize) -> usize {
        let u = self.unit_of[v];
        let mut out = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| self.unit_of[w] != u);
        let w = out.next().expect("every vertex leaves its unit once");
        debug_assert!(out.next().is_none());
        w
    }

    /// Number of graph edges between units `x` and `y`.
    pub fn edges_between(&self, x: usize, y: usize) -> usize {
        self.adjacency
            .incident(x)
            .iter()
            .filter(|&&e| self.adjacency.other_end(e, x) == y)
            .count()
    }
}

/// Checks the standing hypotheses: cubic, claw-free, connected, not `K4`.
pub(crate) fn check_connected_input(g: &Graph) -> Result<(), ClawFreeError> {
    check_cubic_clawfree(g)?;
    if !g.is_connected() {
        return Err(ClawFreeError::Disconnected);
    }
    if g.order() == 4 {
        return Err(ClawFreeError::IsK4);
    }
    Ok(())
}

pub(crate) fn check_cubic_clawfree(g: &Graph) -> Result<(), ClawFreeError> {
    if let Some(v) = (0..g.order()).find(|&v| g.degree(v) != 3) {
        return Err(ClawFreeError::NotCubic {
            vertex: v,
            degree: g.degree(v),
        });
    }
    if let Some(claw) = g.find_claw() {
        return Err(ClawFreeError::Claw(claw.center));
    }
    Ok(())
}

/// The unique partition of a connected claw-free cubic graph other than `K4`
/// into vertex sets inducing triangles and diamonds.
pub fn triangle_diamond_partition(g: &Graph) -> Result<UnitPartition, ClawFreeError> {
    check_connected_input(g)?;
    let n = g.order();
    let mut unit_of = vec![usize::MAX; n];
    let mut raw: Vec<Unit> = Vec::new();
    // diamonds: an edge cd with two common neighbors
    for (c, d) in g.edges() {
        let common: Vec<usize> = g
            .neighbors(c)
            .iter()
            .copied()
            .filter(|&w| g.has_edge(w, d))
            .collect();
        if common.len() == 2 && unit_of[c] == usize::MAX {
            let (a, b) = (common[0], common[1]);
            debug_assert!(!g.has_edge(a, b), "K4 excluded above");
            for v in [a, b, c, d] {
                if unit_of[v] != usize::MAX {
                    return Err(ClawFreeError::Partition(v));
                }
                unit_of[v] = raw.len();
            }
            raw.push(Unit {
                kind: UnitKind::Diamond,
                vertices: vec![a, b, c, d],
            });
        }
    }
    for v in 0..n {
        if unit_of[v] != usize::MAX {
            continue;
        }
        let nb = g.neighbors(v);
        let pair = [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .map(|(i, j)| (nb[i], nb[j]))
            .find(|&(x, y)| g.has_edge(x, y))
            .ok_or(ClawFreeError::Partition(v))?;
        let mut tri = vec![v, pair.0, pair.1];
        tri.sort_unstable();
        for &x in &tri {
            if unit_of[x] != usize::MAX {
                return Err(ClawFreeError::Partition(x));
            }
            unit_of[x] = raw.len();
        }
        raw.push(Unit {
            kind: UnitKind::Triangle,
            vertices: tri,
        });
    }
    let mut order: Vec<usize> = (0..raw.len()).collect();
    order.sort_by_key(|&i| raw[i].vertices.iter().min().copied());
    let mut rank = vec![0; raw.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let units: Vec<Unit> = order.into_iter().map(|i| raw[i].clone()).collect();
    for u in unit_of.iter_mut() {
        *u = rank[*u];
    }
    let mut adjacency = Multigraph::new(units.len());
    for (x, y) in g.edges() {
        if unit_of[x] != unit_of[y] {
            adjacency
                .add_edge(unit_of[x], unit_of[y])
                .expect("distinct in-range units");
        }
    }
    Ok(UnitPartition {
        units,
        unit_of,
        adjacency,
    })
}

/// A diamond, the triangle it hangs from, and the base triangle below.
///
/// Vertex roles: the diamond is `[a, b, c, d]`; `middle = [m1, m2, m3]`
/// with `m1 ~ a`, `m2 ~ b`; `base = [t, f1, f2]` with `t ~ m3`. The two
/// base vertices `f1 < f2` carry the only edges leaving the tower.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tower {
    pub diamond_unit: usize,
    pub middle_unit: usize,
    pub base_unit: usize,
    pub diamond: [usize; 4],
    pub middle: [usize; 3],
    pub base: [usize; 3],
}

impl Tower {
    pub fn attachments(&self) -> [usize; 2] {
        [self.base[1], self.base[2]]
    }

    pub fn vertices(&self) -> Vec<usize> {
        let mut vs: Vec<usize> = self
            .diamond
            .iter()
            .chain(&self.middle)
            .chain(&self.base)
            .copied()
            .collect();
        vs.sort_unstable();
        vs
    }

    /// The induced 5-cycle `m1 a x b m2`, with `x` the smaller of `c, d`.
    pub fn five_cycle(&self) -> [usize; 5] {
        let [a, b, c, _] = self.diamond;
        [self.middle[0], a, c, b, self.middle[1]]
    }
}

/// Every diamond whose two outside edges go to one triangle unit, whose
/// remaining vertex leads to a further triangle unit, gives a tower.
pub fn find_towers(g: &Graph, p: &UnitPartition) -> Vec<Tower> {
    let mut towers = Vec::new();
    for (du, unit) in p.units.iter().enumerate() {
        if unit.kind != UnitKind::Diamond {
            continue;
        }
        let [a, b, c, d] = [
            unit.vertices[0],
            unit.vertices[1],
            unit.vertices[2],
            unit.vertices[3],
        ];
        let (m1, m2) = (p.outside_neighbor(g, a), p.outside_neighbor(g, b));
        let mu = p.unit_of[m1];
        if p.unit_of[m2] != mu || p.units[mu].kind != UnitKind::Triangle {
            continue;
        }
        let m3 = *p.units[mu]
            .vertices
            .iter()
            .find(|&&x| x != m1 && x != m2)
            .expect("triangle has a third vertex");
        let t = p.outside_neighbor(g, m3);
        let bu = p.unit_of[t];
        if p.units[bu].kind != UnitKind::Triangle {
            continue;
        }
        let mut free: Vec<usize> = p.units[bu]
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != t)
            .collect();
        free.sort_unstable();
        towers.push(Tower {
            diamond_unit: du,
            middle_unit: mu,
            base_unit: bu,
            diamond: [a, b, c, d],
            middle: [m1, m2, m3],
            base: [t, free[0], free[1]],
        });
    }
    towers
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{diamond_necklace, random_clawfree_cubic, Fixture};

    #[test]
    fn necklace_and_prism() {
        let (g, _) = diamond_necklace(5).unwrap();
        let p = triangle_diamond_partition(&g).unwrap();
        assert_eq!((p.triangle_count(), p.diamond_count()), (0, 5));
        assert!(find_towers(&g, &p).is_empty());
        let p = triangle_diamond_partition(&Fixture::Prism.graph()).unwrap();
        assert_eq!((p.triangle_count(), p.diamond_count()), (2, 0));
        assert_eq!(p.edges_between(0, 1), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            triangle_diamond_partition(&Fixture::K4.graph()),
            Err(ClawFreeError::IsK4)
        );
        assert!(matches!(
            triangle_diamond_partition(&Fixture::CompleteBipartite(3).graph()),
            Err(ClawFreeError::Claw(_))
        ));
        let two = Fixture::Prism
            .graph()
            .disjoint_union(&Fixture::Prism.graph());
        assert_eq!(
            triangle_diamond_partition(&two),
            Err(ClawFreeError::Disconnected)
        );
        assert!(matches!(
            triangle_diamond_partition(&Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap()),
            Err(ClawFreeError::NotCubic { .. })
        ));
    }

    #[test]
    fn tower_counts() {
        let g = Fixture::TwoTowers.graph();
        let p = triangle_diamond_partition(&g).unwrap();
        assert_eq!(find_towers(&g, &p).len(), 2);
        let g = Fixture::ThreeTowers.graph();
        let p = triangle_diamond_partition(&g).unwrap();
        let towers = find_towers(&g, &p);
        assert_eq!(towers.len(), 3);
        assert!(towers.iter().all(|t| t.base_unit == towers[0].base_unit));
        for t in &towers {
            let five = t.five_cycle();
            crate::is_two_regular_induced(&g, &five).unwrap();
        }
    }

    #[test]
    fn unit_counts_from_generator() {
        for seed in 0..10 {
            let g = random_clawfree_cubic(4, 3, seed).unwrap();
            let p = triangle_diamond_partition(&g).unwrap();
            assert_eq!((p.triangle_count(), p.diamond_count()), (4, 3));
        }
    }
}
