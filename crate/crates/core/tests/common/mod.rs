#![allow(dead_code)]

use epa::generate::{connect, generate, random_graph, random_weights, GeneratorSpec, SplitMix64};
use epa::recognize::ClassTag;
use epa::{Graph, VertexSet, Weight, WeightFn};

pub const DENSITIES: [f64; 6] = [0.15, 0.3, 0.45, 0.6, 0.75, 0.9];

pub const GENERATED: [ClassTag; 11] = [
    ClassTag::Edgeless,
    ClassTag::Forest,
    ClassTag::Bipartite,
    ClassTag::Chordal,
    ClassTag::Cochordal,
    ClassTag::Cluster,
    ClassTag::Cocluster,
    ClassTag::Cograph,
    ClassTag::Split,
    ClassTag::TriangleFree,
    ClassTag::P3k1Free,
];

/// A graph with `1..=n_max` vertices: half Erdős–Rényi, half a generated
/// class member with up to three planted modulator vertices.
pub fn mixed_graph(seed: u64, n_max: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = 1 + rng.below(n_max);
    if rng.chance(0.5) {
        let p = DENSITIES[rng.below(DENSITIES.len())];
        random_graph(n, p, &mut rng)
    } else {
        let class = GENERATED[rng.below(GENERATED.len())];
        let k = rng.below(n.min(3) + 1);
        let density = DENSITIES[rng.below(DENSITIES.len())];
        let spec = GeneratorSpec {
            class,
            n,
            k,
            density,
            seed: rng.next_u64(),
        };
        generate(&spec).expect("supported class").graph
    }
}

pub fn connected_graph(seed: u64, n_max: usize) -> Graph {
    let g = mixed_graph(seed, n_max);
    connect(&g, &mut SplitMix64::new(seed ^ 0xC0))
}

/// Unit weights on even seeds, random rationals on odd ones.
pub fn weights_for(seed: u64, n: usize) -> WeightFn {
    if seed % 2 == 0 {
        WeightFn::unit(n)
    } else {
        random_weights(n, &mut SplitMix64::new(seed.wrapping_mul(31) ^ 0x77))
    }
}

pub fn class_member(class: ClassTag, seed: u64, n_min: usize, n_max: usize) -> Graph {
    let mut rng = SplitMix64::new(seed);
    let n = n_min + rng.below(n_max - n_min + 1);
    let spec = GeneratorSpec {
        class,
        n,
        k: 0,
        density: 0.5,
        seed: rng.next_u64(),
    };
    generate(&spec).expect("supported class").graph
}

/// Least weight of a cover containing `must` and avoiding `forbid`, by
/// plain enumeration. `None` if no such cover exists.
pub fn min_cover_with(
    g: &Graph,
    w: &WeightFn,
    must: &VertexSet,
    forbid: &VertexSet,
) -> Option<Weight> {
    let n = g.n();
    let mut best: Option<Weight> = None;
    for mask in 0u32..(1 << n) {
        let set = VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        if !must.is_subset(&set) || !set.is_disjoint(forbid) {
            continue;
        }
        if g.edges().any(|(u, v)| !set.contains(u) && !set.contains(v)) {
            continue;
        }
        let wt = w.total(&set);
        if best.as_ref().map_or(true, |b| wt < *b) {
            best = Some(wt);
        }
    }
    best
}

/// Forest test by counting: acyclic iff m + components = n.
pub fn is_forest(g: &Graph) -> bool {
    g.m() + g.connected_components().len() == g.n()
}
