//! Connected vertex cover within OPT + (split vertex deletion number).

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::cvc_savage;
use crate::vc::{two_maximal_clique, Trace};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectedVCSol {
    pub cover: VertexSet,
    pub size: usize,
    pub trace: Trace,
}

impl ConnectedVCSol {
    fn new(cover: VertexSet, algorithm: &'static str, depth: usize) -> Self {
        ConnectedVCSol {
            size: cover.len(),
            cover,
            trace: Trace { algorithm, depth },
        }
    }
}

/// All vertex sets of size at most `max` inducing a connected subgraph,
/// ordered by size and then lexicographically. Each set is produced once by
/// extending only with vertices larger than its smallest member.
pub fn connected_subsets(g: &Graph, max: usize) -> Vec<VertexSet> {
    let n = g.n();
    let mut out = Vec::new();
    if max == 0 {
        return out;
    }
    for v in 0..n {
        let sub = VertexSet::from_vertices(n, [v]);
        let ext = VertexSet::from_vertices(n, g.neighbors(v).iter().copied().filter(|&u| u > v));
        extend(g, v, max, &sub, &g.closed_neighbor_set(v), ext, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.lex_cmp(b)));
    out
}

fn extend(
    g: &Graph,
    root: usize,
    max: usize,
    sub: &VertexSet,
    closed: &VertexSet,
    mut ext: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    out.push(sub.clone());
    if sub.len() == max {
        return;
    }
    while let Some(w) = ext.first() {
        ext.remove(w);
        let mut next_ext = ext.clone();
        for &u in g.neighbors(w) {
            if u > root && !closed.contains(u) {
                next_ext.insert(u);
            }
        }
        let mut next_sub = sub.clone();
        next_sub.insert(w);
        let mut next_closed = closed.clone();
        next_closed.union_with(&g.closed_neighbor_set(w));
        extend(g, root, max, &next_sub, &next_closed, next_ext, out);
    }
}

/// Minimum connected vertex cover if one of size at most `limit` exists.
pub(crate) fn min_cvc_bounded(g: &Graph, limit: usize) -> Option<VertexSet> {
    if g.m() == 0 {
        return Some(VertexSet::new(g.n()));
    }
    connected_subsets(g, limit)
        .into_iter()
        .find(|s| g.is_vertex_cover(s))
}

fn require_connected(g: &Graph) -> Result<()> {
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

fn keep_better(best: &mut Option<VertexSet>, cand: VertexSet) {
    let replace = match best {
        None => true,
        Some(b) => cand.len() < b.len() || (cand.len() == b.len() && cand.lex_cmp(b).is_lt()),
    };
    if replace {
        *best = Some(cand);
    }
}

/// Savage's cover of G and, for every connected Y with |Y| = c + 1, Savage's
/// cover of G⟨Y⟩ lifted back through Y. Connected covers with at most c + 1
/// vertices are candidates as they are. Returns the smallest candidate.
pub fn cvc_budgeted(g: &Graph, c: usize) -> Result<ConnectedVCSol> {
    require_connected(g)?;
    Ok(ConnectedVCSol::new(
        budgeted_cover(g, c),
        "budgeted-savage",
        0,
    ))
}

fn budgeted_cover(g: &Graph, c: usize) -> VertexSet {
    let mut best = None;
    keep_better(&mut best, cvc_savage(g).expect("connected"));
    for y in connected_subsets(g, c + 1) {
        if g.is_vertex_cover(&y) {
            keep_better(&mut best, y.clone());
        }
        if y.len() == c + 1 {
            let h = g.contract_with_pendant(&y).expect("y is nonempty");
            let inner = cvc_savage(&h.graph).expect("contraction keeps connectivity");
            keep_better(&mut best, h.lift(&inner));
        }
    }
    best.expect("savage candidate is always present")
}

/// Exact minimum connected vertex cover of G, given a clique Z with
/// OPT_CVC(G⟨Z⟩) <= c. A minimum cover keeps all of Z or all of Z but one
/// vertex u, so it is the best lift of a minimum cover of G⟨Z⟩ or of some
/// G⟨Z \ {u}⟩.
pub fn cvc_small_after_contraction(g: &Graph, z: &VertexSet, c: usize) -> Result<ConnectedVCSol> {
    require_connected(g)?;
    if !g.is_clique(z) {
        return Err(Error::NotAClique);
    }
    let h = g.contract_with_pendant(z)?;
    let inner = min_cvc_bounded(&h.graph, c).ok_or(Error::BudgetExceeded(c))?;
    let mut best = None;
    keep_better(&mut best, h.lift(&inner));
    if z.len() == 1 {
        if let Some(direct) = min_cvc_bounded(g, c) {
            keep_better(&mut best, direct);
        }
    } else {
        for u in z {
            let mut rest = z.clone();
            rest.remove(u);
            let hu = g.contract_with_pendant(&rest)?;
            if let Some(inner) = min_cvc_bounded(&hu.graph, c + 1) {
                keep_better(&mut best, hu.lift(&inner));
            }
        }
    }
    let cover = best.expect("contracted candidate is present");
    Ok(ConnectedVCSol::new(cover, "contracted-exact", 0))
}

/// Contracts a 2-maximal clique Z. If G⟨Z⟩ has a connected cover of size
/// at most 3 the problem is solved exactly; otherwise Z is lifted into the
/// better of the recursive solution on G⟨Z⟩ and the budgeted Savage cover
/// with c = 4. Ties go to the recursive solution.
pub fn cvc_split(g: &Graph) -> Result<ConnectedVCSol> {
    require_connected(g)?;
    let mut depth = 0;
    let cover = split_rec(g, 0, &mut depth);
    Ok(ConnectedVCSol::new(cover, "split-contract", depth))
}

fn split_rec(g: &Graph, level: usize, depth: &mut usize) -> VertexSet {
    *depth = (*depth).max(level);
    if g.n() == 1 {
        return VertexSet::new(1);
    }
    let z = two_maximal_clique(g);
    let h = g.contract_with_pendant(&z).expect("clique is nonempty");
    if min_cvc_bounded(&h.graph, 3).is_some() {
        return cvc_small_after_contraction(g, &z, 3)
            .expect("budget was just confirmed")
            .cover;
    }
    let recursive = h.lift(&split_rec(&h.graph, level + 1, depth));
    let budgeted = h.lift(&budgeted_cover(&h.graph, 4));
    if budgeted.len() < recursive.len() {
        budgeted
    } else {
        recursive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_of_path() {
        let sets = connected_subsets(&Graph::path(3), 3);
        let as_vecs: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            as_vecs,
            vec![
                vec![0],
                vec![1],
                vec![2],
                vec![0, 1],
                vec![1, 2],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn small_after_contraction_examples() {
        let k4 = Graph::complete(4);
        let sol = cvc_small_after_contraction(&k4, &k4.vertices(), 1).unwrap();
        assert_eq!(sol.size, 3);
        let p4 = Graph::path(4);
        let mid = VertexSet::from_vertices(4, [1, 2]);
        let sol = cvc_small_after_contraction(&p4, &mid, 3).unwrap();
        assert_eq!(sol.cover.to_vec(), vec![1, 2]);
        let bad = VertexSet::from_vertices(4, [0, 2]);
        assert_eq!(
            cvc_small_after_contraction(&p4, &bad, 3),
            Err(Error::NotAClique)
        );
    }

    #[test]
    fn budget_exceeded() {
        let g = Graph::path(9);
        let z = VertexSet::from_vertices(9, [0, 1]);
        assert_eq!(
            cvc_small_after_contraction(&g, &z, 2),
            Err(Error::BudgetExceeded(2))
        );
    }

    #[test]
    fn split_examples() {
        assert_eq!(cvc_split(&Graph::path(4)).unwrap().size, 2);
        assert_eq!(cvc_split(&Graph::empty(1)).unwrap().size, 0);
        assert_eq!(cvc_split(&Graph::empty(2)), Err(Error::Disconnected));
        let c8 = Graph::cycle(8);
        let sol = cvc_split(&c8).unwrap();
        assert!(c8.is_vertex_cover(&sol.cover));
        assert!(c8.induced_subgraph(&sol.cover).graph.is_connected());
    }

    #[test]
    fn budgeted_exact_when_small() {
        let g = Graph::star(5);
        assert_eq!(cvc_budgeted(&g, 2).unwrap().size, 1);
    }
}
