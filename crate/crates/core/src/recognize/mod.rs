//! Class membership tests that always come with a witness: either the
//! structure that proves membership or an induced forbidden pattern.

mod chordal;
mod cotree;
mod patterns;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub use chordal::{find_hole, is_perfect_elimination_order, mcs_order};
pub use cotree::{build_cotree, Cotree, CotreeNode};
pub use patterns::{find_co_p3, find_co_triangle, find_p3, find_p3k1, find_p4, find_triangle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassTag {
    Edgeless,
    Forest,
    Bipartite,
    Cluster,
    Cocluster,
    Cograph,
    Split,
    Chordal,
    Cochordal,
    TriangleFree,
    CoTriangleFree,
    P3k1Free,
}

impl ClassTag {
    pub const ALL: [ClassTag; 12] = [
        ClassTag::Edgeless,
        ClassTag::Forest,
        ClassTag::Bipartite,
        ClassTag::Cluster,
        ClassTag::Cocluster,
        ClassTag::Cograph,
        ClassTag::Split,
        ClassTag::Chordal,
        ClassTag::Cochordal,
        ClassTag::TriangleFree,
        ClassTag::CoTriangleFree,
        ClassTag::P3k1Free,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::Edgeless => "edgeless",
            ClassTag::Forest => "forest",
            ClassTag::Bipartite => "bipartite",
            ClassTag::Cluster => "cluster",
            ClassTag::Cocluster => "cocluster",
            ClassTag::Cograph => "cograph",
            ClassTag::Split => "split",
            ClassTag::Chordal => "chordal",
            ClassTag::Cochordal => "cochordal",
            ClassTag::TriangleFree => "triangle-free",
            ClassTag::CoTriangleFree => "co-triangle-free",
            ClassTag::P3k1Free => "p3k1-free",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassTag::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("graph class `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pattern {
    Edge,
    P3,
    /// K2 + K1, the complement of P3.
    CoP3,
    P4,
    Triangle,
    /// Three pairwise non-adjacent vertices.
    CoTriangle,
    P3k1,
    Cycle,
    OddCycle,
    /// Induced cycle on at least four vertices.
    Hole,
    /// Hole of the complement.
    CoHole,
    TwoK2,
    C4,
    C5,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::Edge => "edge",
            Pattern::P3 => "P3",
            Pattern::CoP3 => "co-P3",
            Pattern::P4 => "P4",
            Pattern::Triangle => "triangle",
            Pattern::CoTriangle => "co-triangle",
            Pattern::P3k1 => "P3+K1",
            Pattern::Cycle => "cycle",
            Pattern::OddCycle => "odd cycle",
            Pattern::Hole => "hole",
            Pattern::CoHole => "co-hole",
            Pattern::TwoK2 => "2K2",
            Pattern::C4 => "C4",
            Pattern::C5 => "C5",
        };
        f.write_str(s)
    }
}

/// Positive membership evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Structure {
    Edgeless,
    Acyclic,
    /// One side of a proper 2-colouring.
    Bipartition(VertexSet),
    /// Connected components, each a clique.
    Clusters(Vec<VertexSet>),
    /// Co-components, each an independent set.
    CoClusters(Vec<VertexSet>),
    Cotree(Cotree),
    Split {
        clique: VertexSet,
        independent: VertexSet,
    },
    /// Perfect elimination ordering of the graph.
    EliminationOrder(Vec<usize>),
    /// Perfect elimination ordering of the complement.
    CoEliminationOrder(Vec<usize>),
    /// Class defined by one forbidden pattern that is absent.
    PatternFree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Structure(Structure),
    /// Vertices inducing `pattern`; cycles are listed in cyclic order, paths in
    /// path order.
    Forbidden {
        pattern: Pattern,
        vertices: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub class: ClassTag,
    pub member: bool,
    pub witness: Witness,
}

impl Recognition {
    fn yes(class: ClassTag, s: Structure) -> Self {
        Recognition {
            class,
            member: true,
            witness: Witness::Structure(s),
        }
    }

    fn no(class: ClassTag, pattern: Pattern, vertices: Vec<usize>) -> Self {
        Recognition {
            class,
            member: false,
            witness: Witness::Forbidden { pattern, vertices },
        }
    }

    /// Converts a negative verdict into [`Error::NotInClass`].
    pub fn into_result(self) -> Result<Structure> {
        match self.witness {
            Witness::Structure(s) => Ok(s),
            Witness::Forbidden { pattern, vertices } => Err(Error::NotInClass {
                class: self.class,
                pattern,
                witness: vertices,
            }),
        }
    }
}

pub fn recognize(g: &Graph, class: ClassTag) -> Recognition {
    use ClassTag as C;
    match class {
        C::Edgeless => match patterns::first_edge(g) {
            Some(e) => Recognition::no(class, Pattern::Edge, e.to_vec()),
            None => Recognition::yes(class, Structure::Edgeless),
        },
        C::Forest => match bfs_two_coloring(g, false) {
            Ok(_) => Recognition::yes(class, Structure::Acyclic),
            Err(cycle) => Recognition::no(class, Pattern::Cycle, cycle),
        },
        C::Bipartite => match bfs_two_coloring(g, true) {
            Ok(side) => Recognition::yes(class, Structure::Bipartition(side)),
            Err(cycle) => Recognition::no(class, Pattern::OddCycle, cycle),
        },
        C::Cluster => match find_p3(g) {
            Some(p) => Recognition::no(class, Pattern::P3, p.to_vec()),
            None => Recognition::yes(class, Structure::Clusters(g.connected_components())),
        },
        C::Cocluster => {
            let co = g.complement();
            match find_p3(&co) {
                Some(p) => Recognition::no(class, Pattern::CoP3, p.to_vec()),
                None => Recognition::yes(class, Structure::CoClusters(co.connected_components())),
            }
        }
        C::Cograph => match build_cotree(g) {
            Ok(t) => Recognition::yes(class, Structure::Cotree(t)),
            Err(p4) => Recognition::no(class, Pattern::P4, p4.to_vec()),
        },
        C::Split => recognize_split(g),
        C::Chordal => match chordal_structure(g) {
            Ok(order) => Recognition::yes(class, Structure::EliminationOrder(order)),
            Err(hole) => Recognition::no(class, Pattern::Hole, hole),
        },
        C::Cochordal => match chordal_structure(&g.complement()) {
            Ok(order) => Recognition::yes(class, Structure::CoEliminationOrder(order)),
            Err(hole) => Recognition::no(class, Pattern::CoHole, hole),
        },
        C::TriangleFree => match find_triangle(g) {
            Some(t) => Recognition::no(class, Pattern::Triangle, t.to_vec()),
            None => Recognition::yes(class, Structure::PatternFree),
        },
        C::CoTriangleFree => match find_co_triangle(g) {
            Some(t) => Recognition::no(class, Pattern::CoTriangle, t.to_vec()),
            None => Recognition::yes(class, Structure::PatternFree),
        },
        C::P3k1Free => match find_p3k1(g) {
            Some(p) => Recognition::no(class, Pattern::P3k1, p.to_vec()),
            None => Recognition::yes(class, Structure::PatternFree),
        },
    }
}

pub fn is_member(g: &Graph, class: ClassTag) -> bool {
    recognize(g, class).member
}

/// Searches for an induced copy of one of the small patterns.
pub fn find_induced(g: &Graph, pattern: Pattern) -> Result<Option<Vec<usize>>> {
    Ok(match pattern {
        Pattern::P3 => find_p3(g).map(|p| p.to_vec()),
        Pattern::CoP3 => find_co_p3(g).map(|p| p.to_vec()),
        Pattern::P4 => find_p4(g).map(|p| p.to_vec()),
        Pattern::Triangle => find_triangle(g).map(|p| p.to_vec()),
        Pattern::CoTriangle => find_co_triangle(g).map(|p| p.to_vec()),
        Pattern::P3k1 => find_p3k1(g).map(|p| p.to_vec()),
        other => return Err(Error::Unsupported(format!("pattern search for {other}"))),
    })
}

fn chordal_structure(g: &Graph) -> std::result::Result<Vec<usize>, Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    if is_perfect_elimination_order(g, &order) {
        Ok(order)
    } else {
        Err(find_hole(g).expect("graph without a perfect elimination ordering has a hole"))
    }
}

/// BFS 2-colouring. With `odd_only` unset any non-tree edge is reported as a
/// cycle (forest test); otherwise only monochromatic edges are.
fn bfs_two_coloring(g: &Graph, odd_only: bool) -> std::result::Result<VertexSet, Vec<usize>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == u8::MAX {
                    color[u] = 1 - color[v];
                    parent[u] = v;
                    depth[u] = depth[v] + 1;
                    queue.push_back(u);
                } else if u != parent[v] && (!odd_only || color[u] == color[v]) {
                    let cycle = tree_cycle(&parent, &depth, v, u);
                    return Err(drop_chords(g, cycle, odd_only));
                }
            }
        }
    }
    Ok(VertexSet::from_vertices(
        n,
        (0..n).filter(|&v| color[v] == 0),
    ))
}

/// Splits the cycle along chords until none is left. With `odd` set the odd
/// half is kept, otherwise the shorter one.
fn drop_chords(g: &Graph, mut cycle: Vec<usize>, odd: bool) -> Vec<usize> {
    'outer: loop {
        let k = cycle.len();
        for i in 0..k {
            for j in i + 2..k {
                if (i == 0 && j == k - 1) || !g.has_edge(cycle[i], cycle[j]) {
                    continue;
                }
                let inner = cycle[i..=j].to_vec();
                let mut outer = cycle[j..].to_vec();
                outer.extend_from_slice(&cycle[..=i]);
                let keep_inner = if odd {
                    inner.len() % 2 == 1
                } else {
                    inner.len() <= outer.len()
                };
                cycle = if keep_inner { inner } else { outer };
                continue 'outer;
            }
        }
        return cycle;
    }
}

/// Closes the non-tree edge `a`-`b` through the BFS tree into a simple cycle.
fn tree_cycle(parent: &[usize], depth: &[usize], a: usize, b: usize) -> Vec<usize> {
    let (mut x, mut y) = (a, b);
    let mut left = vec![x];
    let mut right = vec![y];
    while depth[x] > depth[y] {
        x = parent[x];
        left.push(x);
    }
    while depth[y] > depth[x] {
        y = parent[y];
        right.push(y);
    }
    while x != y {
        x = parent[x];
        y = parent[y];
        left.push(x);
        right.push(y);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Degree-sequence test (Hammer and Simeone) with a hole-based obstruction:
/// a non-split graph has a hole in G or in its complement, and any such hole
/// contains 2K2, C4 or C5.
fn recognize_split(g: &Graph) -> Recognition {
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let degs: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let k = (0..n).take_while(|&i| degs[i] >= i).count();
    let head: usize = degs[..k].iter().sum();
    let tail: usize = degs[k..].iter().sum();
    if head == k * k.saturating_sub(1) + tail {
        let mut clique = VertexSet::from_vertices(n, order[..k].iter().copied());
        let mut independent = clique.complement();
        // prefer the smaller clique when a clique vertex has no neighbour in I
        if k >= 2 {
            if let Some(&v) = order[..k]
                .iter()
                .rev()
                .find(|&&v| g.neighbor_set(v).is_disjoint(&independent))
            {
                clique.remove(v);
                independent.insert(v);
            }
        }
        return Recognition::yes(
            ClassTag::Split,
            Structure::Split {
                clique,
                independent,
            },
        );
    }
    if let Err(h) = chordal_structure(g) {
        return match h.len() {
            4 => Recognition::no(ClassTag::Split, Pattern::C4, h),
            5 => Recognition::no(ClassTag::Split, Pattern::C5, h),
            _ => Recognition::no(
                ClassTag::Split,
                Pattern::TwoK2,
                vec![h[0], h[1], h[3], h[4]],
            ),
        };
    }
    let h = chordal_structure(&g.complement()).expect_err("chordal and cochordal graphs are split");
    match h.len() {
        4 => Recognition::no(
            ClassTag::Split,
            Pattern::TwoK2,
            vec![h[0], h[2], h[1], h[3]],
        ),
        5 => Recognition::no(
            ClassTag::Split,
            Pattern::C5,
            vec![h[0], h[2], h[4], h[1], h[3]],
        ),
        _ => Recognition::no(ClassTag::Split, Pattern::C4, vec![h[0], h[3], h[1], h[4]]),
    }
}
