use crate::error::Result;
use crate::graph::Graph;
use crate::recognize::{recognize, ClassTag};
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

/// Minimum-weight vertex cover of a forest by the usual in/out tree DP.
/// Trees are rooted at their lowest id; ties prefer leaving a vertex out.
pub fn wvc_forest(g: &Graph, w: &WeightFn) -> Result<VertexSet> {
    recognize(g, ClassTag::Forest).into_result()?;
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = VertexSet::new(n);
    for root in 0..n {
        if !seen.insert(root) {
            continue;
        }
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for &u in g.neighbors(v) {
                if seen.insert(u) {
                    parent[u] = v;
                    stack.push(u);
                }
            }
        }
    }
    // out[v]: best cost of v's subtree with v excluded; inn[v]: with v included
    let mut out: Vec<Weight> = vec![Weight::default(); n];
    let mut inn: Vec<Weight> = w.as_slice().to_vec();
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            let best = if out[v] <= inn[v] {
                out[v].clone()
            } else {
                inn[v].clone()
            };
            out[p] = &out[p] + &inn[v];
            inn[p] = &inn[p] + best;
        }
    }
    let mut cover = VertexSet::new(n);
    for &v in &order {
        let p = parent[v];
        let forced = p != usize::MAX && !cover.contains(p);
        let take = forced || inn[v] < out[v];
        if take {
            cover.insert(v);
        }
    }
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p3_unit_takes_middle() {
        let c = wvc_forest(&Graph::path(3), &WeightFn::unit(3)).unwrap();
        assert_eq!(c.to_vec(), vec![1]);
    }

    #[test]
    fn p3_heavy_middle_takes_ends() {
        let w = WeightFn::from_integers([1, 5, 1]).unwrap();
        let c = wvc_forest(&Graph::path(3), &w).unwrap();
        assert_eq!(c.to_vec(), vec![0, 2]);
    }

    #[test]
    fn rejects_cycle() {
        assert!(wvc_forest(&Graph::cycle(3), &WeightFn::unit(3)).is_err());
    }
}
