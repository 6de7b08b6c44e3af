use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognize::{build_cotree, find_p3, ClassTag, Cotree, CotreeNode, Pattern};
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

/// Exact minimum-weight vertex cover of a cograph via its cotree. A union
/// node takes the union of its children's covers; a join node must take all
/// children but one completely, and covers that one optimally.
pub fn wvc_cograph(g: &Graph, w: &WeightFn) -> Result<VertexSet> {
    let tree = build_cotree(g).map_err(|p4| Error::NotInClass {
        class: ClassTag::Cograph,
        pattern: Pattern::P4,
        witness: p4.to_vec(),
    })?;
    Ok(solve(&tree, tree.root(), w).0)
}

fn solve(tree: &Cotree, node: usize, w: &WeightFn) -> (VertexSet, Weight) {
    match tree.node(node) {
        CotreeNode::Leaf(_) => (VertexSet::new(tree.vertex_count()), Weight::default()),
        CotreeNode::Union(children) => {
            let mut cover = VertexSet::new(tree.vertex_count());
            let mut weight = Weight::default();
            for &c in children {
                let (s, x) = solve(tree, c, w);
                cover.union_with(&s);
                weight += x;
            }
            (cover, weight)
        }
        CotreeNode::Join(children) => {
            let parts: Vec<VertexSet> = children.iter().map(|&c| tree.leaves(c)).collect();
            let full: Vec<Weight> = parts.iter().map(|p| w.total(p)).collect();
            let all: Weight = full.iter().sum();
            let mut best: Option<(VertexSet, Weight)> = None;
            for (i, &c) in children.iter().enumerate() {
                let (inner, x) = solve(tree, c, w);
                let cost = &all - &full[i] + &x;
                if best.as_ref().map_or(true, |(_, b)| cost < *b) {
                    let mut cover = inner;
                    for (j, p) in parts.iter().enumerate() {
                        if j != i {
                            cover.union_with(p);
                        }
                    }
                    best = Some((cover, cost));
                }
            }
            best.expect("join has children")
        }
    }
}

/// Cluster graphs: each clique keeps one maximum-weight vertex (lowest id on
/// ties) and covers the rest.
pub fn wvc_cluster(g: &Graph, w: &WeightFn) -> Result<VertexSet> {
    if let Some(p) = find_p3(g) {
        return Err(Error::NotInClass {
            class: ClassTag::Cluster,
            pattern: Pattern::P3,
            witness: p.to_vec(),
        });
    }
    let mut cover = VertexSet::new(g.n());
    for part in g.connected_components() {
        let keep = part
            .iter()
            .fold(None::<usize>, |acc, v| match acc {
                Some(a) if w.get(a) >= w.get(v) => Some(a),
                _ => Some(v),
            })
            .expect("component is nonempty");
        cover.union_with(&part);
        cover.remove(keep);
    }
    Ok(cover)
}
