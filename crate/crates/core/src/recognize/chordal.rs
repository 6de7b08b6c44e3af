use std::collections::VecDeque;

use crate::graph::Graph;

/// Maximum cardinality search visit order (ties to the lowest id).
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !visited[v])
            .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
            .expect("unvisited vertex");
        visited[v] = true;
        order.push(v);
        for &u in g.neighbors(v) {
            if !visited[u] {
                weight[u] += 1;
            }
        }
    }
    order
}

/// Checks that `order` (first eliminated first) is a perfect elimination
/// ordering: the later neighbours of every vertex form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    if order.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    for &v in order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| pos[u] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&u| pos[u]) else {
            continue;
        };
        if later.iter().any(|&u| u != parent && !g.has_edge(parent, u)) {
            return false;
        }
    }
    true
}

/// Finds an induced cycle on at least four vertices, in cyclic order.
///
/// For a vertex `v` with non-adjacent neighbours `u`, `w`, a shortest
/// `u`-`w` path avoiding the rest of N[v] closes a chordless cycle through
/// `v`. Such a triple exists iff the graph is not chordal.
pub fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    for v in 0..n {
        let closed = g.closed_neighbor_set(v);
        for &u in g.neighbors(v) {
            let mut targets = g.neighbor_set(v).difference(g.neighbor_set(u));
            targets.remove(u);
            if targets.is_empty() {
                continue;
            }
            // BFS from u inside (V \ N[v]) ∪ {u}
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(x) = queue.pop_front() {
                for &y in g.neighbors(x) {
                    if dist[y] == usize::MAX && !closed.contains(y) {
                        dist[y] = dist[x] + 1;
                        parent[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            for w in &targets {
                let best = g
                    .neighbors(w)
                    .iter()
                    .copied()
                    .filter(|&x| x != u && dist[x] != usize::MAX)
                    .min_by_key(|&x| (dist[x], x));
                if let Some(x) = best {
                    let mut path = vec![x];
                    let mut cur = x;
                    while cur != u {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    let mut cycle = vec![v];
                    cycle.extend(path);
                    cycle.push(w);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

#[cfg(test)]
pub(crate) fn induces_cycle(g: &Graph, cycle: &[usize]) -> bool {
    use crate::vertex_set::VertexSet;
    let k = cycle.len();
    if k < 3 {
        return false;
    }
    let set = VertexSet::from_vertices(g.n(), cycle.iter().copied());
    if set.len() != k {
        return false;
    }
    (0..k).all(|i| {
        let v = cycle[i];
        let deg = g.neighbor_set(v).intersection_len(&set);
        deg == 2 && g.has_edge(v, cycle[(i + 1) % k])
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c4_hole() {
        let g = Graph::cycle(4);
        let order: Vec<usize> = mcs_order(&g).into_iter().rev().collect();
        assert!(!is_perfect_elimination_order(&g, &order));
        let hole = find_hole(&g).unwrap();
        assert_eq!(hole.len(), 4);
        assert!(induces_cycle(&g, &hole));
    }

    #[test]
    fn long_hole_with_chordal_parts() {
        // C6 with a pendant triangle on vertex 0
        let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (0, 7), (6, 7)]);
        let g = Graph::from_edges(8, edges).unwrap();
        let hole = find_hole(&g).unwrap();
        assert_eq!(hole.len(), 6);
        assert!(induces_cycle(&g, &hole));
    }

    #[test]
    fn chordal_has_peo() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let order: Vec<usize> = mcs_order(&g).into_iter().rev().collect();
        assert!(is_perfect_elimination_order(&g, &order));
        assert_eq!(find_hole(&g), None);
    }
}
