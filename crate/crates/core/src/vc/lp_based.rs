use num::Zero;

use crate::graph::Graph;
use crate::recognize::find_triangle;
use crate::solvers::{fvs_2approx, lp_half_integral_vc, wvc_forest};
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

use super::VertexCoverSol;

/// V1 of the half-integral LP, plus a 2-approximate feedback vertex set F of
/// G[V_half], plus an optimal cover of the forest G[V_half] - F.
pub fn vc_fvs(g: &Graph, w: &WeightFn) -> VertexCoverSol {
    VertexCoverSol::new(fvs_pipeline(g, w), w, "lp-fvs", 0)
}

fn fvs_pipeline(g: &Graph, w: &WeightFn) -> VertexSet {
    let lp = lp_half_integral_vc(g, w);
    let half = g.induced_subgraph(&lp.v_half);
    let half_w = w.restrict(&half.map);
    let fvs = fvs_2approx(&half.graph, &half_w);
    let forest = half.graph.delete(&fvs);
    let forest_cover = wvc_forest(&forest.graph, &half_w.restrict(&forest.map))
        .expect("deleting a feedback vertex set leaves a forest");
    let mut cover = lp.v1;
    cover.union_with(&half.lift(&fvs));
    cover.union_with(&half.lift(&forest.lift(&forest_cover)));
    cover
}

/// Local ratio on triangles until the positive-weight part is triangle-free
/// (zero-weight vertices join the cover), then [`vc_fvs`] on what is left.
pub fn vc_chordal(g: &Graph, w: &WeightFn) -> VertexCoverSol {
    let n = g.n();
    let mut residual: Vec<Weight> = w.as_slice().to_vec();
    let mut zero = VertexSet::from_vertices(n, (0..n).filter(|&v| residual[v].is_zero()));
    let mut rounds = 0;
    loop {
        let rest = g.delete(&zero);
        let Some(t) = find_triangle(&rest.graph) else {
            break;
        };
        rounds += 1;
        let t = t.map(|v| rest.map[v]);
        let lambda = t
            .iter()
            .map(|&v| &residual[v])
            .min()
            .expect("triangle")
            .clone();
        for v in t {
            residual[v] -= &lambda;
            if residual[v].is_zero() {
                zero.insert(v);
            }
        }
    }
    let rest = g.delete(&zero);
    let rest_w = WeightFn::new(rest.map.iter().map(|&v| residual[v].clone()).collect())
        .expect("residual weights stay nonnegative");
    let mut cover = rest.lift(&fvs_pipeline(&rest.graph, &rest_w));
    cover.union_with(&zero);
    VertexCoverSol::new(cover, w, "triangle-ratio-lp-fvs", rounds)
}
