use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A clique that no swap of at most two incoming vertices for strictly fewer
/// outgoing ones can enlarge.
///
/// The seed grows from the highest-degree vertex, repeatedly adding the
/// highest-degree vertex adjacent to the whole clique (lowest id on ties).
/// Improvements then add single vertices, or an adjacent pair while dropping
/// at most one clique vertex, until none applies.
pub fn two_maximal_clique(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut z = VertexSet::new(n);
    if n == 0 {
        return z;
    }
    let by_degree = |set: &VertexSet| {
        set.iter()
            .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
    };
    let start = by_degree(&g.vertices()).expect("n > 0");
    z.insert(start);
    let mut common = g.neighbor_set(start).clone();
    while let Some(v) = by_degree(&common) {
        z.insert(v);
        common.intersect_with(g.neighbor_set(v));
    }
    while improve(g, &mut z) {}
    z
}

/// Applies the first available improving swap. Returns false if `z` is
/// already 2-maximal.
fn improve(g: &Graph, z: &mut VertexSet) -> bool {
    let outside = z.complement();
    for a in &outside {
        if z.is_subset(g.neighbor_set(a)) {
            z.insert(a);
            return true;
        }
    }
    for a in &outside {
        for &b in g.neighbors(a).iter().filter(|&&b| b > a && !z.contains(b)) {
            let mut missing = z.difference(g.neighbor_set(a));
            missing.union_with(&z.difference(g.neighbor_set(b)));
            if missing.len() <= 1 {
                z.difference_with(&missing);
                z.insert(a);
                z.insert(b);
                return true;
            }
        }
    }
    false
}

/// Exhaustive check of the 2-maximality condition.
pub fn is_two_maximal(g: &Graph, z: &VertexSet) -> bool {
    if !g.is_clique(z) {
        return false;
    }
    let mut probe = z.clone();
    !improve(g, &mut probe)
}
