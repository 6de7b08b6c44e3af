use num::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

/// Edge local ratio: each edge in turn pays the smaller residual weight of
/// its ends. Non-isolated vertices brought to zero form the cover.
pub fn vc_2approx(g: &Graph, w: &WeightFn) -> VertexSet {
    let mut residual: Vec<Weight> = w.as_slice().to_vec();
    for (u, v) in g.edges() {
        let eps = residual[u].clone().min(residual[v].clone());
        residual[u] -= &eps;
        residual[v] -= &eps;
    }
    VertexSet::from_vertices(
        g.n(),
        (0..g.n()).filter(|&v| g.degree(v) > 0 && residual[v].is_zero()),
    )
}

/// Non-leaf vertices of the depth-first tree rooted at vertex 0, neighbours
/// visited in ascending order. A root with one child is dropped when all its
/// neighbours are already in the set.
pub fn cvc_savage(g: &Graph) -> Result<VertexSet> {
    let n = g.n();
    if n == 0 {
        return Ok(VertexSet::new(0));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut visited = VertexSet::new(n);
    let mut children = vec![0usize; n];
    let mut stack: Vec<(usize, usize)> = vec![(0, 0)];
    visited.insert(0);
    while let Some(&mut (v, ref mut next)) = stack.last_mut() {
        let nb = g.neighbors(v);
        while *next < nb.len() && visited.contains(nb[*next]) {
            *next += 1;
        }
        if *next == nb.len() {
            stack.pop();
            continue;
        }
        let u = nb[*next];
        visited.insert(u);
        children[v] += 1;
        stack.push((u, 0));
    }
    let mut cover = VertexSet::from_vertices(n, (0..n).filter(|&v| children[v] > 0));
    if children[0] == 1 && g.neighbors(0).iter().all(|&u| cover.contains(u)) {
        cover.remove(0);
    }
    Ok(cover)
}
