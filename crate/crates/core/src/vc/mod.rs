//! Vertex cover algorithms whose additive error is bounded by a modulator.

mod clique;
mod ffree;
mod lp_based;
mod split;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

pub use clique::{is_two_maximal, two_maximal_clique};
pub use ffree::{vc_local_ratio_ffree, FFreeConfig, FFreeFamily};
pub use lp_based::{vc_chordal, vc_fvs};
pub use split::{vc_budgeted_2approx, vc_split};

/// Which algorithm produced a solution and how deep its recursion went.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trace {
    pub algorithm: &'static str,
    pub depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCoverSol {
    pub cover: VertexSet,
    pub weight: Weight,
    pub trace: Trace,
}

impl VertexCoverSol {
    pub(crate) fn new(
        cover: VertexSet,
        w: &WeightFn,
        algorithm: &'static str,
        depth: usize,
    ) -> Self {
        VertexCoverSol {
            weight: w.total(&cover),
            cover,
            trace: Trace { algorithm, depth },
        }
    }
}

/// The complement of a vertex cover.
pub fn independent_set_from_cover(g: &Graph, sol: &VertexCoverSol) -> Result<VertexSet> {
    if sol.cover.capacity() != g.n() || !g.is_vertex_cover(&sol.cover) {
        return Err(Error::InfeasibleCover);
    }
    Ok(sol.cover.complement())
}

/// Smaller weight wins; equal weights go to the lexicographically smaller set.
pub(crate) fn better(a: &VertexSet, b: &VertexSet, w: &WeightFn) -> bool {
    match w.total(a).cmp(&w.total(b)) {
        std::cmp::Ordering::Less => true,
        std::cmp::Ordering::Greater => false,
        std::cmp::Ordering::Equal => a.lex_cmp(b).is_lt(),
    }
}
