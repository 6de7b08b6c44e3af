use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::patterns::find_p4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    /// Children indices into [`Cotree::nodes`].
    Union(Vec<usize>),
    Join(Vec<usize>),
}

/// Union/join decomposition of a cograph. Children of a union are connected
/// pieces, children of a join are co-connected pieces, so labels alternate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    root: usize,
    n: usize,
}

impl Cotree {
    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn node(&self, index: usize) -> &CotreeNode {
        &self.nodes[index]
    }

    pub fn leaves(&self, index: usize) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        let mut stack = vec![index];
        while let Some(i) = stack.pop() {
            match &self.nodes[i] {
                CotreeNode::Leaf(v) => {
                    out.insert(*v);
                }
                CotreeNode::Union(ch) | CotreeNode::Join(ch) => stack.extend(ch),
            }
        }
        out
    }

    /// The graph this cotree describes: u ~ v iff their lowest common
    /// ancestor is a join node.
    pub fn evaluate(&self) -> Graph {
        let mut rows = vec![VertexSet::new(self.n); self.n];
        for node in &self.nodes {
            if let CotreeNode::Join(children) = node {
                let parts: Vec<VertexSet> = children.iter().map(|&c| self.leaves(c)).collect();
                for (i, a) in parts.iter().enumerate() {
                    for b in &parts[i + 1..] {
                        for u in a {
                            rows[u].union_with(b);
                        }
                        for v in b {
                            rows[v].union_with(a);
                        }
                    }
                }
            }
        }
        Graph::from_rows(rows)
    }

    /// No internal node has a child with the same label, and internal nodes
    /// have at least two children.
    pub fn is_alternating(&self) -> bool {
        self.nodes.iter().all(|node| match node {
            CotreeNode::Leaf(_) => true,
            CotreeNode::Union(ch) => {
                ch.len() >= 2
                    && ch
                        .iter()
                        .all(|&c| !matches!(self.nodes[c], CotreeNode::Union(_)))
            }
            CotreeNode::Join(ch) => {
                ch.len() >= 2
                    && ch
                        .iter()
                        .all(|&c| !matches!(self.nodes[c], CotreeNode::Join(_)))
            }
        })
    }
}

/// Splits `set` into connected pieces of G[set] (or of its complement when
/// `complement` is set), in order of smallest member.
pub(crate) fn pieces(g: &Graph, set: &VertexSet, complement: bool) -> Vec<VertexSet> {
    let mut unseen = set.clone();
    let mut out = Vec::new();
    while let Some(root) = unseen.first() {
        unseen.remove(root);
        let mut part = VertexSet::from_vertices(g.n(), [root]);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let next = if complement {
                unseen.difference(g.neighbor_set(v))
            } else {
                unseen.intersection(g.neighbor_set(v))
            };
            for u in &next {
                unseen.remove(u);
                part.insert(u);
                queue.push_back(u);
            }
        }
        out.push(part);
    }
    out
}

/// Builds the cotree of `g`, or returns four vertices inducing a P4 (in path
/// order) taken from a piece where both the graph and its complement are
/// connected.
pub fn build_cotree(g: &Graph) -> Result<Cotree, [usize; 4]> {
    let n = g.n();
    let mut nodes = Vec::new();
    if n == 0 {
        return Ok(Cotree {
            nodes: vec![CotreeNode::Union(Vec::new())],
            root: 0,
            n,
        });
    }
    let root = build(g, &g.vertices(), &mut nodes)?;
    Ok(Cotree { nodes, root, n })
}

fn build(g: &Graph, set: &VertexSet, nodes: &mut Vec<CotreeNode>) -> Result<usize, [usize; 4]> {
    if set.len() == 1 {
        nodes.push(CotreeNode::Leaf(set.first().expect("nonempty")));
        return Ok(nodes.len() - 1);
    }
    let comps = pieces(g, set, false);
    if comps.len() > 1 {
        let children = comps
            .iter()
            .map(|c| build(g, c, nodes))
            .collect::<Result<Vec<_>, _>>()?;
        nodes.push(CotreeNode::Union(children));
        return Ok(nodes.len() - 1);
    }
    let cocomps = pieces(g, set, true);
    if cocomps.len() > 1 {
        let children = cocomps
            .iter()
            .map(|c| build(g, c, nodes))
            .collect::<Result<Vec<_>, _>>()?;
        nodes.push(CotreeNode::Join(children));
        return Ok(nodes.len() - 1);
    }
    let sub = g.induced_subgraph(set);
    let p4 = find_p4(&sub.graph).expect("a graph and its complement both connected contain P4");
    Err(p4.map(|v| sub.map[v]))
}
