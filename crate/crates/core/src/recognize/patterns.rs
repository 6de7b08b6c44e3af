//! Searches for small induced patterns. Every finder returns the
//! lexicographically earliest hit of its scan order, in the vertex order
//! that makes the pattern explicit (path order for paths).

use crate::graph::Graph;

/// A vertex with two non-adjacent neighbours. Returns `[a, center, c]`.
pub fn find_p3(g: &Graph) -> Option<[usize; 3]> {
    for v in 0..g.n() {
        let nv = g.neighbor_set(v);
        for &a in g.neighbors(v) {
            let mut rest = nv.difference(g.neighbor_set(a));
            rest.remove(a);
            if let Some(c) = rest.iter().find(|&c| c > a) {
                return Some([a, v, c]);
            }
        }
    }
    None
}

pub fn find_triangle(g: &Graph) -> Option<[usize; 3]> {
    for u in 0..g.n() {
        for &v in g.neighbors(u).iter().filter(|&&v| v > u) {
            let common = g.neighbor_set(u).intersection(g.neighbor_set(v));
            if let Some(w) = common.iter().find(|&w| w > v) {
                return Some([u, v, w]);
            }
        }
    }
    None
}

/// Induced P4 in path order, found through its middle edge.
pub fn find_p4(g: &Graph) -> Option<[usize; 4]> {
    for (b, c) in g.edges() {
        for (b, c) in [(b, c), (c, b)] {
            let mut ends_b = g.neighbor_set(b).difference(g.neighbor_set(c));
            ends_b.remove(c);
            if ends_b.is_empty() {
                continue;
            }
            let mut ends_c = g.neighbor_set(c).difference(g.neighbor_set(b));
            ends_c.remove(b);
            for a in &ends_b {
                if let Some(d) = ends_c.difference(g.neighbor_set(a)).first() {
                    return Some([a, b, c, d]);
                }
            }
        }
    }
    None
}

/// Induced P3 + K1 as `[a, center, c, isolated]`.
pub fn find_p3k1(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for v in 0..n {
        for &a in g.neighbors(v) {
            for &c in g.neighbors(v).iter().filter(|&&c| c > a) {
                if g.has_edge(a, c) {
                    continue;
                }
                let mut touched = g.closed_neighbor_set(v);
                touched.union_with(&g.closed_neighbor_set(a));
                touched.union_with(&g.closed_neighbor_set(c));
                if let Some(d) = touched.complement().first() {
                    return Some([a, v, c, d]);
                }
            }
        }
    }
    None
}

pub fn find_co_triangle(g: &Graph) -> Option<[usize; 3]> {
    find_triangle(&g.complement())
}

/// An edge plus a vertex adjacent to neither end, as `[a, center, c]` where
/// `a`-`center` and `center`-`c` are non-edges and `a`-`c` is an edge.
pub fn find_co_p3(g: &Graph) -> Option<[usize; 3]> {
    find_p3(&g.complement())
}

pub(crate) fn first_edge(g: &Graph) -> Option<[usize; 2]> {
    g.edges().next().map(|(u, v)| [u, v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn triangle_examples() {
        assert_eq!(find_triangle(&paw()), Some([0, 1, 2]));
        assert_eq!(find_triangle(&Graph::cycle(4)), None);
    }

    #[test]
    fn p4_in_c5() {
        let c5 = Graph::cycle(5);
        let p = find_p4(&c5).unwrap();
        for i in 0..3 {
            assert!(c5.has_edge(p[i], p[i + 1]));
        }
        assert!(!c5.has_edge(p[0], p[3]));
        assert_eq!(find_p4(&Graph::complete(4)), None);
    }

    #[test]
    fn p3_examples() {
        assert_eq!(find_p3(&Graph::path(3)), Some([0, 1, 2]));
        assert_eq!(find_p3(&Graph::complete(5)), None);
    }

    #[test]
    fn p3k1_examples() {
        let g = Graph::path(3).disjoint_union(&Graph::empty(1));
        assert_eq!(find_p3k1(&g), Some([0, 1, 2, 3]));
        assert_eq!(find_p3k1(&Graph::cycle(5)), None);
    }
}
