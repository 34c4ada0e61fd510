use std::collections::VecDeque;

use super::Graph;

/// Length of a shortest cycle, or `None` for forests.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        parent[root] = usize::MAX;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// A shortest cycle as a cyclic vertex sequence.
///
/// Among all shortest cycles the lexicographically smallest sequence is
/// returned, where a cycle is written from its smallest vertex toward the
/// smaller of that vertex's two cycle neighbors. A shortest cycle has no
/// chord, so the result is always an induced cycle.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let len = girth(g)?;
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    for root in 0..n {
        // distances to root inside the subgraph of vertices >= root
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if w > root && dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![root];
        let mut on_path = vec![false; n];
        on_path[root] = true;
        if extend(g, len, root, &dist, &mut path, &mut on_path) {
            return Some(path);
        }
    }
    unreachable!("girth {len} was found but no cycle of that length exists")
}

fn extend(
    g: &Graph,
    len: usize,
    root: usize,
    dist: &[usize],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
) -> bool {
    let u = *path.last().expect("nonempty path");
    if path.len() == len {
        return g.has_edge(u, root);
    }
    let remaining = len - path.len();
    for &w in g.neighbors(u) {
        if w <= root || on_path[w] || dist[w] == usize::MAX || dist[w] > remaining {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        if extend(g, len, root, dist, path, on_path) {
            return true;
        }
        path.pop();
        on_path[w] = false;
    }
    false
}

/// True if some edge of `g` joins two non-consecutive vertices of `cycle`.
pub fn has_chord(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    let mut pos = std::collections::HashMap::with_capacity(k);
    for (i, &v) in cycle.iter().enumerate() {
        pos.insert(v, i);
    }
    cycle.iter().enumerate().any(|(i, &v)| {
        g.neighbors(v).iter().any(|w| match pos.get(w) {
            Some(&j) => {
                let d = i.abs_diff(j);
                d != 1 && d != k - 1
            }
            None => false,
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forest_has_no_cycle() {
        let t = Graph::from_edges(5, [(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(girth(&t), None);
        assert_eq!(shortest_cycle(&t), None);
    }

    #[test]
    fn k4_gives_first_triangle() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(shortest_cycle(&k4), Some(vec![0, 1, 2]));
    }

    #[test]
    fn c6_with_chord() {
        let mut edges: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.push((0, 3));
        let g = Graph::from_edges(6, edges).unwrap();
        assert_eq!(girth(&g), Some(4));
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c, vec![0, 1, 2, 3]);
        assert!(!has_chord(&g, &c));
        assert!(has_chord(&g, &[0, 1, 2, 3, 4, 5]));
    }
}
