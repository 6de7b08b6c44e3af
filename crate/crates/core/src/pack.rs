//! Triangle packing with loss bounded by a cluster or cocluster modulator.

use crate::graph::Graph;
use crate::vc::Trace;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrianglePackingSol {
    /// Each triangle in ascending vertex order.
    pub triangles: Vec<[usize; 3]>,
    pub size: usize,
    pub trace: Trace,
}

impl TrianglePackingSol {
    fn new(mut triangles: Vec<[usize; 3]>, algorithm: &'static str, rounds: usize) -> Self {
        triangles.sort();
        TrianglePackingSol {
            size: triangles.len(),
            triangles,
            trace: Trace {
                algorithm,
                depth: rounds,
            },
        }
    }
}

fn covered(n: usize, triangles: &[[usize; 3]]) -> VertexSet {
    VertexSet::from_vertices(n, triangles.iter().flatten().copied())
}

/// Adds triangles inside `free` until none is left, scanning vertices in
/// ascending order and taking the lexicographically first completing pair.
fn fill(g: &Graph, free: &mut VertexSet, out: &mut Vec<[usize; 3]>) {
    for u in 0..g.n() {
        if !free.contains(u) {
            continue;
        }
        let nu = g.neighbor_set(u).intersection(free);
        'pairs: for v in &nu {
            for w in nu.intersection(g.neighbor_set(v)).iter().filter(|&w| w > v) {
                let mut t = [u, v, w];
                t.sort_unstable();
                out.push(t);
                free.remove(u);
                free.remove(v);
                free.remove(w);
                break 'pairs;
            }
        }
    }
}

/// A maximal packing built greedily.
pub fn tp_maximal(g: &Graph) -> TrianglePackingSol {
    let mut free = g.vertices();
    let mut out = Vec::new();
    fill(g, &mut free, &mut out);
    TrianglePackingSol::new(out, "greedy-maximal", 0)
}

/// Greedy maximal packing improved by swaps that remove at most two packed
/// triangles and insert strictly more, until no such swap exists.
pub fn tp_3maximal(g: &Graph) -> TrianglePackingSol {
    let n = g.n();
    let mut packing = tp_maximal(g).triangles;
    let mut rounds = 0;
    while let Some(next) = improving_swap(g, &packing) {
        packing = next;
        let mut free = covered(n, &packing).complement();
        fill(g, &mut free, &mut packing);
        rounds += 1;
    }
    TrianglePackingSol::new(packing, "three-maximal", rounds)
}

/// The first swap (fewest removals, then lowest indices) that gains a
/// triangle, as the resulting packing.
fn improving_swap(g: &Graph, packing: &[[usize; 3]]) -> Option<Vec<[usize; 3]>> {
    let n = g.n();
    let free = covered(n, packing).complement();
    let k = packing.len();
    let mut outs: Vec<Vec<usize>> = vec![vec![]];
    outs.extend((0..k).map(|i| vec![i]));
    for i in 0..k {
        for j in i + 1..k {
            outs.push(vec![i, j]);
        }
    }
    for out in outs {
        let removed = covered(n, &out.iter().map(|&i| packing[i]).collect::<Vec<_>>());
        let pool = free.union(&removed);
        let candidates = triangles_touching(g, &pool, &removed, out.is_empty());
        let mut chosen = Vec::new();
        if pick_disjoint(
            &candidates,
            out.len() + 1,
            0,
            &mut VertexSet::new(n),
            &mut chosen,
        ) {
            let mut next: Vec<[usize; 3]> = (0..k)
                .filter(|i| !out.contains(i))
                .map(|i| packing[i])
                .collect();
            next.extend(chosen.iter().map(|&c| candidates[c]));
            return Some(next);
        }
    }
    None
}

/// Triangles inside `pool` meeting `touch` (or all of them when `any`).
fn triangles_touching(
    g: &Graph,
    pool: &VertexSet,
    touch: &VertexSet,
    any: bool,
) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for u in pool {
        let nu = g.neighbor_set(u).intersection(pool);
        for v in nu.iter().filter(|&v| v > u) {
            for w in nu.intersection(g.neighbor_set(v)).iter().filter(|&w| w > v) {
                if any || touch.contains(u) || touch.contains(v) || touch.contains(w) {
                    out.push([u, v, w]);
                }
            }
        }
    }
    out
}

fn pick_disjoint(
    cands: &[[usize; 3]],
    need: usize,
    from: usize,
    used: &mut VertexSet,
    chosen: &mut Vec<usize>,
) -> bool {
    if chosen.len() == need {
        return true;
    }
    for i in from..cands.len() {
        let t = cands[i];
        if t.iter().any(|&v| used.contains(v)) {
            continue;
        }
        t.iter().for_each(|&v| {
            used.insert(v);
        });
        chosen.push(i);
        if pick_disjoint(cands, need, i + 1, used, chosen) {
            return true;
        }
        chosen.pop();
        t.iter().for_each(|&v| {
            used.remove(v);
        });
    }
    false
}
