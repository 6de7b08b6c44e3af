//! Certificate checkers. Each re-derives validity from the graph alone and
//! never looks at how a solution was produced.

use crate::graph::Graph;
use crate::recognize::{ClassTag, Pattern, Structure, Witness};
use crate::vertex_set::VertexSet;

pub fn is_cover(g: &Graph, cover: &VertexSet) -> bool {
    cover.capacity() == g.n()
        && g.edges()
            .all(|(u, v)| cover.contains(u) || cover.contains(v))
}

/// A cover whose vertices induce a connected subgraph. The empty set counts
/// only for edgeless graphs.
pub fn is_connected_cover(g: &Graph, cover: &VertexSet) -> bool {
    if !is_cover(g, cover) {
        return false;
    }
    let Some(start) = cover.first() else {
        return true;
    };
    let mut seen = VertexSet::new(g.n());
    seen.insert(start);
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &u in g.neighbors(v) {
            if cover.contains(u) && !seen.contains(u) {
                seen.insert(u);
                stack.push(u);
            }
        }
    }
    seen.len() == cover.len()
}

/// Proper colouring using exactly the colours `1..=used`.
pub fn is_proper_coloring(g: &Graph, color: &[usize], used: usize) -> bool {
    if color.len() != g.n() || color.iter().any(|&c| c == 0 || c > used) {
        return false;
    }
    let mut present = vec![false; used + 1];
    for &c in color {
        present[c] = true;
    }
    present[1..].iter().all(|&p| p) && g.edges().all(|(u, v)| color[u] != color[v])
}

pub fn is_triangle_packing(g: &Graph, triangles: &[[usize; 3]]) -> bool {
    let mut used = vec![false; g.n()];
    for t in triangles {
        let [a, b, c] = *t;
        if a >= g.n() || b >= g.n() || c >= g.n() {
            return false;
        }
        if !(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)) {
            return false;
        }
        for v in t {
            if used[*v] {
                return false;
            }
            used[*v] = true;
        }
    }
    true
}

/// Brute-force 2-maximality: `z` is a clique and no clique arises from
/// dropping at most one vertex of `z` and adding more than were dropped,
/// with at most two additions.
pub fn is_two_maximal_brute(g: &Graph, z: &VertexSet) -> bool {
    if !g.is_clique(z) {
        return false;
    }
    let outside: Vec<usize> = z.complement().to_vec();
    let mut drops: Vec<Option<usize>> = vec![None];
    drops.extend(z.iter().map(Some));
    for drop in drops {
        let mut base = z.clone();
        if let Some(d) = drop {
            base.remove(d);
        }
        let mut adds: Vec<Vec<usize>> = outside.iter().map(|&a| vec![a]).collect();
        for (i, &a) in outside.iter().enumerate() {
            for &b in &outside[i + 1..] {
                adds.push(vec![a, b]);
            }
        }
        for add in adds {
            let gained = add.len();
            let lost = usize::from(drop.is_some());
            if gained <= lost {
                continue;
            }
            let mut cand = base.clone();
            for &a in &add {
                cand.insert(a);
            }
            if g.is_clique(&cand) {
                return false;
            }
        }
    }
    true
}

/// Brute-force 3-maximality of a packing: no removal of at most two
/// triangles admits strictly more disjoint triangles in their place.
pub fn is_three_maximal_brute(g: &Graph, packing: &[[usize; 3]]) -> bool {
    if !is_triangle_packing(g, packing) {
        return false;
    }
    let n = g.n();
    let mut all = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                    all.push([a, b, c]);
                }
            }
        }
    }
    let k = packing.len();
    let mut removals: Vec<Vec<usize>> = vec![vec![]];
    removals.extend((0..k).map(|i| vec![i]));
    for i in 0..k {
        for j in i + 1..k {
            removals.push(vec![i, j]);
        }
    }
    for removal in removals {
        let mut blocked = vec![false; n];
        for (i, t) in packing.iter().enumerate() {
            if !removal.contains(&i) {
                for &v in t {
                    blocked[v] = true;
                }
            }
        }
        let usable: Vec<[usize; 3]> = all
            .iter()
            .copied()
            .filter(|t| t.iter().all(|&v| !blocked[v]))
            .collect();
        if disjoint_count(&usable, &mut vec![false; n], 0, removal.len() + 1) > removal.len() {
            return false;
        }
    }
    true
}

fn disjoint_count(tris: &[[usize; 3]], used: &mut [bool], from: usize, cap: usize) -> usize {
    if cap == 0 {
        return 0;
    }
    let mut best = 0;
    for i in from..tris.len() {
        let t = tris[i];
        if t.iter().any(|&v| used[v]) {
            continue;
        }
        for &v in &t {
            used[v] = true;
        }
        best = best.max(1 + disjoint_count(tris, used, i + 1, cap - 1));
        for &v in &t {
            used[v] = false;
        }
        if best == cap {
            break;
        }
    }
    best
}

fn adjacent_count(g: &Graph, vs: &[usize]) -> usize {
    let mut count = 0;
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            count += usize::from(g.has_edge(a, b));
        }
    }
    count
}

fn distinct_in_range(g: &Graph, vs: &[usize]) -> bool {
    let set = VertexSet::from_vertices(g.n(), vs.iter().copied().filter(|&v| v < g.n()));
    vs.iter().all(|&v| v < g.n()) && set.len() == vs.len()
}

fn degrees_in(g: &Graph, vs: &[usize]) -> Vec<usize> {
    let set = VertexSet::from_vertices(g.n(), vs.iter().copied());
    let mut d: Vec<usize> = vs
        .iter()
        .map(|&v| g.neighbor_set(v).intersection_len(&set))
        .collect();
    d.sort_unstable();
    d
}

fn is_induced_cycle(g: &Graph, vs: &[usize]) -> bool {
    let k = vs.len();
    k >= 3
        && distinct_in_range(g, vs)
        && adjacent_count(g, vs) == k
        && (0..k).all(|i| g.has_edge(vs[i], vs[(i + 1) % k]))
}

/// Whether `vs` induces `pattern` in `g`.
pub fn induces_pattern(g: &Graph, pattern: Pattern, vs: &[usize]) -> bool {
    if !distinct_in_range(g, vs) {
        return false;
    }
    let d = degrees_in(g, vs);
    match pattern {
        Pattern::Edge => vs.len() == 2 && d == [1, 1],
        Pattern::P3 => vs.len() == 3 && d == [1, 1, 2],
        Pattern::CoP3 => vs.len() == 3 && d == [0, 1, 1],
        Pattern::P4 => vs.len() == 4 && d == [1, 1, 2, 2],
        Pattern::Triangle => vs.len() == 3 && d == [2, 2, 2],
        Pattern::CoTriangle => vs.len() == 3 && d == [0, 0, 0],
        Pattern::P3k1 => vs.len() == 4 && d == [0, 1, 1, 2],
        Pattern::TwoK2 => vs.len() == 4 && d == [1, 1, 1, 1],
        Pattern::C4 => vs.len() == 4 && is_induced_cycle(g, vs),
        Pattern::C5 => vs.len() == 5 && is_induced_cycle(g, vs),
        Pattern::Cycle => is_induced_cycle(g, vs),
        Pattern::OddCycle => vs.len() % 2 == 1 && is_induced_cycle(g, vs),
        Pattern::Hole => vs.len() >= 4 && is_induced_cycle(g, vs),
        Pattern::CoHole => vs.len() >= 4 && is_induced_cycle(&g.complement(), vs),
    }
}

/// Validates a recognition witness: a forbidden pattern must be induced and
/// must indeed be forbidden for the class; a positive structure must
/// certify membership.
pub fn witness_is_valid(g: &Graph, class: ClassTag, member: bool, witness: &Witness) -> bool {
    match witness {
        Witness::Forbidden { pattern, vertices } => {
            !member
                && forbids(class, *pattern, vertices.len())
                && induces_pattern(g, *pattern, vertices)
        }
        Witness::Structure(s) => member && structure_is_valid(g, class, s),
    }
}

fn forbids(class: ClassTag, pattern: Pattern, len: usize) -> bool {
    use ClassTag as C;
    use Pattern as P;
    match (class, pattern) {
        (C::Edgeless, P::Edge) => true,
        (C::Forest, P::Cycle) => true,
        (C::Bipartite, P::OddCycle) => true,
        (C::Chordal, P::Hole | P::C4 | P::C5) => true,
        (C::Cochordal, P::CoHole | P::TwoK2) => true,
        (C::Cochordal, P::C4) => false,
        (C::Cochordal, P::C5) => len == 5,
        (C::Cluster, P::P3) => true,
        (C::Cocluster, P::CoP3) => true,
        (C::Cograph, P::P4) => true,
        (C::Split, P::TwoK2 | P::C4 | P::C5) => true,
        (C::TriangleFree, P::Triangle) => true,
        (C::CoTriangleFree, P::CoTriangle) => true,
        (C::P3k1Free, P::P3k1) => true,
        _ => false,
    }
}

fn is_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let n = g.n();
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    if order.len() != n {
        return false;
    }
    order.iter().all(|&v| {
        let later = VertexSet::from_vertices(
            n,
            g.neighbors(v).iter().copied().filter(|&u| pos[u] > pos[v]),
        );
        g.is_clique(&later)
    })
}

fn is_partition_into_cliques(g: &Graph, parts: &[VertexSet], complement: bool) -> bool {
    let n = g.n();
    let mut seen = VertexSet::new(n);
    for p in parts {
        if !seen.is_disjoint(p) {
            return false;
        }
        seen.union_with(p);
    }
    if seen.len() != n {
        return false;
    }
    // inside a part: all adjacent (or all non-adjacent); across: the opposite
    g.vertices().iter().all(|u| {
        g.vertices().iter().filter(|&v| v > u).all(|v| {
            let same = parts.iter().any(|p| p.contains(u) && p.contains(v));
            g.has_edge(u, v) == (same != complement)
        })
    })
}

fn structure_is_valid(g: &Graph, class: ClassTag, s: &Structure) -> bool {
    use ClassTag as C;
    match (class, s) {
        (C::Edgeless, Structure::Edgeless) => g.m() == 0,
        (C::Forest, Structure::Acyclic) => g.m() + g.connected_components().len() == g.n(),
        (C::Bipartite, Structure::Bipartition(side)) => {
            g.edges().all(|(u, v)| side.contains(u) != side.contains(v))
        }
        (C::Cluster, Structure::Clusters(parts)) => is_partition_into_cliques(g, parts, false),
        (C::Cocluster, Structure::CoClusters(parts)) => is_partition_into_cliques(g, parts, true),
        (
            C::Split,
            Structure::Split {
                clique,
                independent,
            },
        ) => {
            clique.is_disjoint(independent)
                && clique.union(independent).len() == g.n()
                && g.is_clique(clique)
                && g.is_independent(independent)
        }
        (C::Chordal, Structure::EliminationOrder(order)) => is_elimination_order(g, order),
        (C::Cochordal, Structure::CoEliminationOrder(order)) => {
            is_elimination_order(&g.complement(), order)
        }
        (C::Cograph, Structure::Cotree(t)) => t.is_alternating() && t.evaluate() == *g,
        (C::TriangleFree | C::CoTriangleFree | C::P3k1Free, Structure::PatternFree) => {
            let pattern = match class {
                C::TriangleFree => Pattern::Triangle,
                C::CoTriangleFree => Pattern::CoTriangle,
                _ => Pattern::P3k1,
            };
            let k = if class == C::P3k1Free { 4 } else { 3 };
            !any_subset_induces(g, pattern, k)
        }
        _ => false,
    }
}

fn any_subset_induces(g: &Graph, pattern: Pattern, k: usize) -> bool {
    use itertools::Itertools;
    (0..g.n())
        .combinations(k)
        .any(|vs| induces_pattern(g, pattern, &vs))
}
