//! Seeded instance generation with a planted modulator.
//!
//! Randomness comes from SplitMix64: the state advances by
//! `0x9E3779B97F4A7C15` and each output is
//! `z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9; z = (z ^ z >> 27) * 0x94D049BB133111EB; z ^ z >> 31`
//! in wrapping 64-bit arithmetic. `below(b)` is `next % b` and a coin with
//! probability `p` succeeds when `next >> 11 < floor(p * 2^53)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{is_member, ClassTag};
use crate::vertex_set::VertexSet;
use crate::weight::{ratio, WeightFn};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform-ish value in `0..bound`; `bound` must be positive.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    pub fn chance(&mut self, p: f64) -> bool {
        let threshold = (p.clamp(0.0, 1.0) * (1u64 << 53) as f64) as u64;
        (self.next_u64() >> 11) < threshold
    }

    /// Fisher–Yates, from the back.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i + 1);
            items.swap(i, j);
        }
    }
}

/// Parameters for [`generate`]. `n` counts all vertices, `k` of which form
/// the planted modulator.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSpec {
    pub class: ClassTag,
    pub n: usize,
    pub k: usize,
    /// Edge probability between a planted vertex and each earlier vertex.
    /// A planted vertex that draws no edge is joined to one at random.
    pub density: f64,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generated {
    pub graph: Graph,
    pub planted: VertexSet,
}

pub fn generate(spec: &GeneratorSpec) -> Result<Generated> {
    if spec.class == ClassTag::CoTriangleFree {
        return Err(Error::Unsupported(format!("generator for {}", spec.class)));
    }
    if spec.k > spec.n {
        return Err(Error::Unsupported(format!(
            "modulator of {} in {} vertices",
            spec.k, spec.n
        )));
    }
    let mut rng = SplitMix64::new(spec.seed);
    let b = spec.n - spec.k;
    let base = base_graph(spec.class, b, &mut rng);
    let n = spec.n;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for m in b..n {
        let before = edges.len();
        for u in 0..m {
            if rng.chance(spec.density) {
                edges.push((u, m));
            }
        }
        // planted vertices are never isolated
        if edges.len() == before && m > 0 {
            edges.push((rng.below(m), m));
        }
    }
    let mut label: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut label);
    let graph = Graph::from_edges(n, edges.into_iter().map(|(u, v)| (label[u], label[v])))?;
    let planted = VertexSet::from_vertices(n, (b..n).map(|v| label[v]));
    let rest = graph.delete(&planted);
    assert!(
        is_member(&rest.graph, spec.class),
        "generator produced a non-member of {}",
        spec.class
    );
    Ok(Generated { graph, planted })
}

fn base_graph(class: ClassTag, b: usize, rng: &mut SplitMix64) -> Graph {
    use ClassTag as C;
    match class {
        C::Edgeless => Graph::empty(b),
        C::Cluster => cluster(b, rng),
        C::Cocluster => cluster(b, rng).complement(),
        C::Forest => forest(b, rng),
        C::Bipartite => bipartite(b, rng),
        C::Split => split(b, rng),
        C::Cograph => cograph(b, rng),
        C::Chordal => chordal(b, rng),
        C::Cochordal => chordal(b, rng).complement(),
        C::TriangleFree => triangle_free(b, rng),
        C::P3k1Free => {
            let a = rng.below(b + 1);
            cluster(a, rng)
                .complement()
                .join(&triangle_free(b - a, rng).complement())
        }
        C::CoTriangleFree => unreachable!("rejected by generate"),
    }
}

fn edges_of(n: usize, edges: Vec<(usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator edges are simple")
}

fn cluster(b: usize, rng: &mut SplitMix64) -> Graph {
    if b == 0 {
        return Graph::empty(0);
    }
    let blocks = 1 + rng.below(b);
    let block: Vec<usize> = (0..b).map(|_| rng.below(blocks)).collect();
    let mut edges = Vec::new();
    for u in 0..b {
        for v in u + 1..b {
            if block[u] == block[v] {
                edges.push((u, v));
            }
        }
    }
    edges_of(b, edges)
}

fn forest(b: usize, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..b {
        if rng.chance(0.8) {
            edges.push((rng.below(v), v));
        }
    }
    edges_of(b, edges)
}

fn bipartite(b: usize, rng: &mut SplitMix64) -> Graph {
    let side: Vec<bool> = (0..b).map(|_| rng.chance(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..b {
        for v in u + 1..b {
            if side[u] != side[v] && rng.chance(0.5) {
                edges.push((u, v));
            }
        }
    }
    edges_of(b, edges)
}

/// Every independent vertex sees at least one clique vertex, so the result
/// is connected whenever the clique is nonempty.
fn split(b: usize, rng: &mut SplitMix64) -> Graph {
    let c = if b == 0 { 0 } else { 1 + rng.below(b) };
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for i in c..b {
        let before = edges.len();
        for u in 0..c {
            if rng.chance(0.5) {
                edges.push((u, i));
            }
        }
        if edges.len() == before {
            edges.push((rng.below(c), i));
        }
    }
    edges_of(b, edges)
}

fn cograph(b: usize, rng: &mut SplitMix64) -> Graph {
    let mut parts: Vec<Graph> = (0..b).map(|_| Graph::empty(1)).collect();
    while parts.len() > 1 {
        let x = parts.remove(rng.below(parts.len()));
        let y = parts.remove(rng.below(parts.len()));
        let joined = if rng.chance(0.5) {
            x.join(&y)
        } else {
            x.disjoint_union(&y)
        };
        parts.push(joined);
    }
    parts.pop().unwrap_or_else(|| Graph::empty(0))
}

/// Intersection graph of random subtrees of a random tree.
fn chordal(b: usize, rng: &mut SplitMix64) -> Graph {
    if b == 0 {
        return Graph::empty(0);
    }
    let t = b;
    let mut tree_adj = vec![Vec::new(); t];
    for v in 1..t {
        let p = rng.below(v);
        tree_adj[v].push(p);
        tree_adj[p].push(v);
    }
    let subtrees: Vec<VertexSet> = (0..b)
        .map(|_| {
            let mut sub = VertexSet::from_vertices(t, [rng.below(t)]);
            for _ in 0..rng.below(3) {
                let members = sub.to_vec();
                let from = members[rng.below(members.len())];
                let nb = &tree_adj[from];
                if !nb.is_empty() {
                    sub.insert(nb[rng.below(nb.len())]);
                }
            }
            sub
        })
        .collect();
    let mut edges = Vec::new();
    for u in 0..b {
        for v in u + 1..b {
            if !subtrees[u].is_disjoint(&subtrees[v]) {
                edges.push((u, v));
            }
        }
    }
    edges_of(b, edges)
}

fn triangle_free(b: usize, rng: &mut SplitMix64) -> Graph {
    let mut adj = vec![VertexSet::new(b); b];
    let mut edges = Vec::new();
    for u in 0..b {
        for v in u + 1..b {
            if rng.chance(0.5) && adj[u].is_disjoint(&adj[v]) {
                adj[u].insert(v);
                adj[v].insert(u);
                edges.push((u, v));
            }
        }
    }
    edges_of(b, edges)
}

/// Erdős–Rényi graph.
pub fn random_graph(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.chance(p) {
                edges.push((u, v));
            }
        }
    }
    edges_of(n, edges)
}

/// Adds an edge from the smallest vertex of each component to a random
/// vertex of the components before it.
pub fn connect(g: &Graph, rng: &mut SplitMix64) -> Graph {
    let comps = g.connected_components();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut earlier: Vec<usize> = Vec::new();
    for (i, comp) in comps.iter().enumerate() {
        if i > 0 {
            let target = earlier[rng.below(earlier.len())];
            edges.push((target, comp.first().expect("components are nonempty")));
        }
        earlier.extend(comp.iter());
    }
    edges_of(g.n(), edges)
}

/// Weights `p/q` with `p` in `0..=6` and `q` in `1..=4`.
pub fn random_weights(n: usize, rng: &mut SplitMix64) -> WeightFn {
    WeightFn::new(
        (0..n)
            .map(|_| ratio(rng.below(7) as i64, 1 + rng.below(4) as i64))
            .collect(),
    )
    .expect("weights are nonnegative")
}

/// Sidecar listing the planted modulator, 1-indexed.
pub fn modulator_sidecar(spec: &GeneratorSpec, planted: &VertexSet) -> String {
    let mut out = format!(
        "c planted modulator to {} (n={}, k={}, seed={})\n",
        spec.class, spec.n, spec.k, spec.seed
    );
    for v in planted {
        out.push_str(&format!("{}\n", v + 1));
    }
    out
}
