//! Immutable simple undirected graphs on dense vertex ids `0..n`.
//!
//! Every derived graph (complement, induced subgraph, contraction) is a new
//! value; the operations that drop or merge vertices return the index map
//! needed to translate a solution back to the parent graph.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    rows: Vec<VertexSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// Rejects self-loops, parallel edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut rows = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !rows[u].insert(v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    /// `rows` must be symmetric and loop-free.
    pub(crate) fn from_rows(rows: Vec<VertexSet>) -> Graph {
        let adj: Vec<Vec<usize>> = rows.iter().map(VertexSet::to_vec).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        debug_assert!(rows.iter().enumerate().all(|(v, r)| !r.contains(v)));
        Graph { adj, rows, m }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        let rows = (0..n)
            .map(|v| {
                let mut r = VertexSet::full(n);
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// Star with center 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
        Graph::from_edges(a + b, edges).expect("complete bipartite graph is simple")
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("petersen graph is simple")
    }

    /// Vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)));
        Graph::from_edges(shift + other.n(), edges).expect("union of simple graphs")
    }

    /// Disjoint union plus every edge between the two parts.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let n = shift + other.n();
        let cross = (0..shift).flat_map(|u| (shift..n).map(move |v| (u, v)));
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .chain(cross);
        Graph::from_edges(n, edges).expect("join of simple graphs")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    /// Sorted ascending.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn neighbor_set(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    pub fn closed_neighbor_set(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Each edge once as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    pub fn is_clique(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| {
            let mut others = set.clone();
            others.remove(v);
            others.is_subset(&self.rows[v])
        })
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.rows[v].is_disjoint(set))
    }

    pub fn is_vertex_cover(&self, set: &VertexSet) -> bool {
        let outside = set.complement();
        self.is_independent(&outside)
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut r = self.rows[v].complement();
                r.remove(v);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }

    pub fn induced_subgraph(&self, set: &VertexSet) -> Subgraph {
        let map = set.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let k = map.len();
        let rows = map
            .iter()
            .map(|&v| {
                VertexSet::from_vertices(
                    k,
                    self.adj[v]
                        .iter()
                        .filter(|&&u| set.contains(u))
                        .map(|&u| index[u]),
                )
            })
            .collect();
        Subgraph {
            graph: Graph::from_rows(rows),
            map,
            parent_n: self.n(),
        }
    }

    /// G - set.
    pub fn delete(&self, set: &VertexSet) -> Subgraph {
        self.induced_subgraph(&set.complement())
    }

    /// G⟨Y⟩: `y` merged into one vertex adjacent to N(y) \ y, plus a new leaf
    /// hanging off it. Untouched vertices keep their relative order; the
    /// contracted vertex and the leaf come last.
    pub fn contract_with_pendant(&self, y: &VertexSet) -> Result<Contraction, GraphError> {
        if y.is_empty() {
            return Err(GraphError::EmptyContraction);
        }
        let rest: Vec<usize> = (0..self.n()).filter(|&v| !y.contains(v)).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in rest.iter().enumerate() {
            index[v] = i;
        }
        let contracted = rest.len();
        let leaf = contracted + 1;
        let n = contracted + 2;
        let mut edges = Vec::new();
        for (i, &v) in rest.iter().enumerate() {
            let mut touches_y = false;
            for &u in &self.adj[v] {
                if y.contains(u) {
                    touches_y = true;
                } else if index[u] > i {
                    edges.push((i, index[u]));
                }
            }
            if touches_y {
                edges.push((i, contracted));
            }
        }
        edges.push((contracted, leaf));
        let graph = Graph::from_edges(n, edges).expect("contraction stays simple");
        Ok(Contraction {
            graph,
            contracted,
            leaf,
            map: rest,
            merged: y.clone(),
        })
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut parts = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut part = VertexSet::new(n);
            let mut queue = VecDeque::from([root]);
            seen.insert(root);
            while let Some(v) = queue.pop_front() {
                part.insert(v);
                for &u in &self.adj[v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            parts.push(part);
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components().len() == 1
    }

    /// Removes a minimum-degree vertex (lowest id on ties) until the graph is
    /// empty. Returns the removal order and the largest residual degree seen.
    pub fn degeneracy_order(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut degree: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut degeneracy = 0;
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (degree[v], v))
                .expect("a vertex remains");
            degeneracy = degeneracy.max(degree[v]);
            removed[v] = true;
            order.push(v);
            for &u in &self.adj[v] {
                if !removed[u] {
                    degree[u] -= 1;
                }
            }
        }
        (order, degeneracy)
    }
}

/// An induced subgraph together with the ids its vertices had in the parent.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `map[i]` is the parent id of vertex `i`.
    pub map: Vec<usize>,
    parent_n: usize,
}

impl Subgraph {
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.parent_n, set.iter().map(|v| self.map[v]))
    }

    pub fn parent_n(&self) -> usize {
        self.parent_n
    }
}

/// The result of [`Graph::contract_with_pendant`].
#[derive(Clone, Debug)]
pub struct Contraction {
    pub graph: Graph,
    /// Id of the vertex that replaced the merged set.
    pub contracted: usize,
    /// Id of the appended degree-one vertex.
    pub leaf: usize,
    /// Parent ids of the untouched vertices `0..contracted`.
    pub map: Vec<usize>,
    /// The merged set, in parent ids.
    pub merged: VertexSet,
}

impl Contraction {
    /// (X' \ {contracted, leaf}) ∪ Y, in parent ids.
    pub fn lift(&self, set: &VertexSet) -> VertexSet {
        let mut out = self.merged.clone();
        for v in set.iter().filter(|&v| v < self.contracted) {
            out.insert(self.map[v]);
        }
        out
    }
}
