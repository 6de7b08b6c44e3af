use num::Zero;

use crate::graph::Graph;
use crate::recognize::{is_member, ClassTag};
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

/// Local-ratio feedback vertex set with degree-proportional weight cuts,
/// followed by reverse deletion so the result is inclusion-minimal.
pub fn fvs_2approx(g: &Graph, w: &WeightFn) -> VertexSet {
    let n = g.n();
    let mut residual: Vec<Weight> = w.as_slice().to_vec();
    let mut alive = g.vertices();
    let mut picked: Vec<usize> = Vec::new();
    loop {
        strip_low_degree(g, &mut alive);
        if alive.is_empty() {
            break;
        }
        let degree = |v: usize| g.neighbor_set(v).intersection_len(&alive);
        let gamma = alive
            .iter()
            .map(|v| &residual[v] / Weight::from_integer(degree(v).into()))
            .min()
            .expect("alive is nonempty");
        let zeroed: Vec<usize> = alive
            .iter()
            .filter(|&v| {
                let d = Weight::from_integer(degree(v).into());
                residual[v] -= &gamma * d;
                residual[v].is_zero()
            })
            .collect();
        for v in zeroed {
            alive.remove(v);
            picked.push(v);
        }
    }
    let mut fvs = VertexSet::from_vertices(n, picked.iter().copied());
    for &v in picked.iter().rev() {
        fvs.remove(v);
        if !is_member(&g.delete(&fvs).graph, ClassTag::Forest) {
            fvs.insert(v);
        }
    }
    fvs
}

fn strip_low_degree(g: &Graph, alive: &mut VertexSet) {
    loop {
        let low: Vec<usize> = alive
            .iter()
            .filter(|&v| g.neighbor_set(v).intersection_len(alive) <= 1)
            .collect();
        if low.is_empty() {
            return;
        }
        for v in low {
            alive.remove(v);
        }
    }
}
