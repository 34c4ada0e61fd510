use std::collections::{BTreeMap, VecDeque};

use super::Graph;

/// An isomorphism `a -> b` as a vertex map, found by color refinement
/// followed by backtracking. Intended for the small fixed graphs the crate
/// matches against (tens of vertices).
pub fn find_isomorphism(a: &Graph, b: &Graph) -> Option<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.size() != b.size() {
        return None;
    }
    let (ca, cb) = refine_colors(a, b);
    let mut hist_a = BTreeMap::new();
    let mut hist_b = BTreeMap::new();
    for (&x, &y) in ca.iter().zip(&cb) {
        *hist_a.entry(x).or_insert(0) += 1;
        *hist_b.entry(y).or_insert(0) += 1;
    }
    if hist_a != hist_b {
        return None;
    }
    let order = search_order(a, &ca, &hist_a);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &ca, &cb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn refine_colors(a: &Graph, b: &Graph) -> (Vec<usize>, Vec<usize>) {
    let mut ca: Vec<usize> = (0..a.order()).map(|v| a.degree(v)).collect();
    let mut cb: Vec<usize> = (0..b.order()).map(|v| b.degree(v)).collect();
    let mut classes = 0;
    loop {
        let sig = |g: &Graph, c: &[usize], v: usize| {
            let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| c[w]).collect();
            nb.sort_unstable();
            (c[v], nb)
        };
        let sa: Vec<_> = (0..a.order()).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..b.order()).map(|v| sig(b, &cb, v)).collect();
        let mut ids = BTreeMap::new();
        for s in sa.iter().chain(&sb) {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        ca = sa.iter().map(|s| ids[s]).collect();
        cb = sb.iter().map(|s| ids[s]).collect();
        if ids.len() == classes {
            return (ca, cb);
        }
        classes = ids.len();
    }
}

fn search_order(a: &Graph, ca: &[usize], hist: &BTreeMap<usize, usize>) -> Vec<usize> {
    let n = a.order();
    let mut seen = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (hist[&ca[v]], v));
    for r in roots {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let mut queue = VecDeque::from([r]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in a.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &Graph,
    b: &Graph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    let mapped_nbr = a.neighbors(v).iter().find(|&&w| map[w] != usize::MAX);
    let candidates: Vec<usize> = match mapped_nbr {
        Some(&w) => b.neighbors(map[w]).to_vec(),
        None => (0..b.order()).collect(),
    };
    for x in candidates {
        if used[x] || cb[x] != ca[v] {
            continue;
        }
        let consistent = a
            .neighbors(v)
            .iter()
            .all(|&w| map[w] == usize::MAX || b.has_edge(map[w], x))
            && a.neighbors(v)
                .iter()
                .filter(|&&w| map[w] != usize::MAX)
                .count()
                == b.neighbors(x).iter().filter(|&&y| used[y]).count();
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        map[v] = usize::MAX;
        used[x] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabeled_cycle_is_isomorphic() {
        let c6 = Graph::from_edges(6, (0..6).map(|i| (i, (i + 1) % 6))).unwrap();
        let perm = [3, 5, 0, 2, 4, 1];
        let h = c6.relabel(&perm);
        let map = find_isomorphism(&c6, &h).unwrap();
        for (u, v) in c6.edges() {
            assert!(h.has_edge(map[u], map[v]));
        }
    }

    #[test]
    fn prism_is_not_k33() {
        let prism = Graph::from_edges(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let k33 = Graph::from_edges(6, (0..3).flat_map(|i| (3..6).map(move |j| (i, j)))).unwrap();
        assert!(find_isomorphism(&prism, &k33).is_none());
    }
}
