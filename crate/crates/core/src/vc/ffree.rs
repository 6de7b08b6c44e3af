use num::Zero;
use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::recognize::{find_co_p3, find_p3, find_p4};
use crate::solvers::{wvc_cluster, wvc_cograph};
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

use super::VertexCoverSol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FFreeFamily {
    P3,
    CoP3,
    P4,
}

pub type ExactSolver = fn(&Graph, &WeightFn) -> Result<VertexSet>;

/// The forbidden family, its largest independence number, and an exact
/// solver for graphs free of the family.
#[derive(Clone, Copy, Debug)]
pub struct FFreeConfig {
    pub family: FFreeFamily,
    pub alpha_star: usize,
    pub exact: ExactSolver,
}

impl FFreeConfig {
    /// Modulator to cluster graphs.
    pub fn cluster() -> Self {
        FFreeConfig {
            family: FFreeFamily::P3,
            alpha_star: 2,
            exact: wvc_cluster,
        }
    }

    /// Modulator to complete multipartite graphs.
    pub fn cocluster() -> Self {
        FFreeConfig {
            family: FFreeFamily::CoP3,
            alpha_star: 2,
            exact: wvc_cograph,
        }
    }

    pub fn cograph() -> Self {
        FFreeConfig {
            family: FFreeFamily::P4,
            alpha_star: 2,
            exact: wvc_cograph,
        }
    }

    fn find(&self, g: &Graph) -> Option<Vec<usize>> {
        match self.family {
            FFreeFamily::P3 => find_p3(g).map(|p| p.to_vec()),
            FFreeFamily::CoP3 => find_co_p3(g).map(|p| p.to_vec()),
            FFreeFamily::P4 => find_p4(g).map(|p| p.to_vec()),
        }
    }

    fn tag(&self) -> &'static str {
        match self.family {
            FFreeFamily::P3 => "local-ratio-p3",
            FFreeFamily::CoP3 => "local-ratio-co-p3",
            FFreeFamily::P4 => "local-ratio-p4",
        }
    }
}

/// Local ratio over copies of the forbidden family: solve exactly once the
/// graph is free of it, peel off zero-weight vertices, and otherwise lower
/// every vertex of a found copy by its minimum weight.
pub fn vc_local_ratio_ffree(g: &Graph, w: &WeightFn, cfg: &FFreeConfig) -> VertexCoverSol {
    let mut depth = 0;
    let cover = recurse(g, w.as_slice().to_vec(), cfg, 0, &mut depth);
    VertexCoverSol::new(cover, w, cfg.tag(), depth)
}

fn recurse(
    g: &Graph,
    mut w: Vec<Weight>,
    cfg: &FFreeConfig,
    level: usize,
    depth: &mut usize,
) -> VertexSet {
    *depth = (*depth).max(level);
    let Some(pattern) = cfg.find(g) else {
        let wf = WeightFn::new(w).expect("residual weights stay nonnegative");
        return (cfg.exact)(g, &wf).expect("graph is free of the family");
    };
    if let Some(v) = (0..g.n()).find(|&v| w[v].is_zero()) {
        let mut drop = VertexSet::new(g.n());
        drop.insert(v);
        let sub = g.delete(&drop);
        let sub_w = sub.map.iter().map(|&u| w[u].clone()).collect();
        let mut cover = sub.lift(&recurse(&sub.graph, sub_w, cfg, level + 1, depth));
        if !g.neighbor_set(v).is_subset(&cover) {
            cover.insert(v);
        }
        return cover;
    }
    let lambda = pattern
        .iter()
        .map(|&v| &w[v])
        .min()
        .expect("pattern is nonempty")
        .clone();
    for &v in &pattern {
        w[v] -= &lambda;
    }
    recurse(g, w, cfg, level + 1, depth)
}
