use itertools::Itertools;

use crate::graph::Graph;
use crate::solvers::vc_2approx;
use crate::vertex_set::VertexSet;
use crate::weight::WeightFn;

use super::{better, two_maximal_clique, VertexCoverSol};

/// Best of Y ∪ 2-approx(G - Y) over all Y with |Y| <= c (unit weights).
pub fn vc_budgeted_2approx(g: &Graph, c: usize) -> VertexCoverSol {
    let w = WeightFn::unit(g.n());
    VertexCoverSol::new(budgeted_cover(g, c), &w, "budgeted-2approx", 0)
}

fn budgeted_cover(g: &Graph, c: usize) -> VertexSet {
    let n = g.n();
    let unit = WeightFn::unit(n);
    let mut best: Option<VertexSet> = None;
    for k in 0..=c.min(n) {
        for y in (0..n).combinations(k) {
            let y = VertexSet::from_vertices(n, y);
            let rest = g.delete(&y);
            let mut cand = rest.lift(&vc_2approx(&rest.graph, &WeightFn::unit(rest.graph.n())));
            cand.union_with(&y);
            if best.as_ref().map_or(true, |b| better(&cand, b, &unit)) {
                best = Some(cand);
            }
        }
    }
    best.expect("the empty Y is always tried")
}

/// Unweighted vertex cover within OPT + (split vertex deletion number).
///
/// Takes a 2-maximal clique Z. When G - Z has a cover of size at most one
/// the optimum is assembled directly; otherwise Z joins the better of the
/// recursive solution on G - Z and the budgeted 2-approximation with c = 2.
/// Ties go to the recursive solution.
pub fn vc_split(g: &Graph) -> VertexCoverSol {
    let mut depth = 0;
    let cover = split_rec(g, 0, &mut depth);
    VertexCoverSol::new(cover, &WeightFn::unit(g.n()), "split-clique", depth)
}

fn split_rec(g: &Graph, level: usize, depth: &mut usize) -> VertexSet {
    *depth = (*depth).max(level);
    let n = g.n();
    if g.is_edgeless() {
        return VertexSet::new(n);
    }
    let z = two_maximal_clique(g);
    let rest = g.delete(&z);
    if let Some(cover) = near_clique_optimum(g, &z, &rest.graph, &rest.map) {
        return cover;
    }
    let mut recursive = rest.lift(&split_rec(&rest.graph, level + 1, depth));
    recursive.union_with(&z);
    let mut budgeted = rest.lift(&budgeted_cover(&rest.graph, 2));
    budgeted.union_with(&z);
    if budgeted.len() < recursive.len() {
        budgeted
    } else {
        recursive
    }
}

/// Exact solution when G - Z has a vertex cover of size at most one. Every
/// cover of G keeps all of Z but at most one vertex v, and the part outside
/// Z is then itself a cover of G - Z of size at most one.
fn near_clique_optimum(g: &Graph, z: &VertexSet, rest: &Graph, map: &[usize]) -> Option<VertexSet> {
    let n = g.n();
    let small: Vec<VertexSet> = if rest.is_edgeless() {
        vec![VertexSet::new(n)]
    } else {
        (0..rest.n())
            .filter(|&x| rest.is_vertex_cover(&VertexSet::from_vertices(rest.n(), [x])))
            .map(|x| VertexSet::from_vertices(n, [map[x]]))
            .collect()
    };
    let unit = WeightFn::unit(n);
    let mut best: Option<VertexSet> = None;
    for x in &small {
        let mut cands = vec![z.union(x)];
        for v in z {
            let mut c = z.union(x);
            c.remove(v);
            if g.is_vertex_cover(&c) {
                cands.push(c);
            }
        }
        for c in cands {
            if best.as_ref().map_or(true, |b| better(&c, b, &unit)) {
                best = Some(c);
            }
        }
    }
    best
}
