//! Colouring algorithms whose colour count is bounded by a modulator.

use std::collections::VecDeque;

use itertools::Itertools;

use crate::graph::Graph;
use crate::recognize::find_co_triangle;
use crate::solvers::max_matching;
use crate::vc::Trace;
use crate::vertex_set::VertexSet;

/// A proper colouring with colours `1..=colors_used`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringSol {
    pub color: Vec<usize>,
    pub colors_used: usize,
    pub trace: Trace,
}

impl ColoringSol {
    /// Renumbers colours by first appearance in vertex order.
    pub(crate) fn normalized(raw: &[usize], algorithm: &'static str) -> Self {
        let mut rename = std::collections::HashMap::new();
        let color = raw
            .iter()
            .map(|c| {
                let next = rename.len() + 1;
                *rename.entry(*c).or_insert(next)
            })
            .collect();
        ColoringSol {
            color,
            colors_used: rename.len(),
            trace: Trace {
                algorithm,
                depth: 0,
            },
        }
    }
}

pub type ColoringAttempt = fn(&Graph) -> Vec<usize>;

/// A colouring routine that succeeds with at most `budget` colours on every
/// member of its class. On other graphs it may return anything.
#[derive(Clone, Copy, Debug)]
pub struct ClassColoringOracle {
    pub class: &'static str,
    pub budget: usize,
    pub attempt: ColoringAttempt,
}

impl ClassColoringOracle {
    /// BFS 2-colouring per component.
    pub fn bipartite() -> Self {
        ClassColoringOracle {
            class: "bipartite",
            budget: 2,
            attempt: bfs_parity,
        }
    }

    /// Greedy along the degeneracy order, valid on 5-degenerate graphs and so
    /// on every planar graph. Weaker than a four-colouring.
    pub fn five_degenerate() -> Self {
        ClassColoringOracle {
            class: "5-degenerate",
            budget: 6,
            attempt: |g| degeneracy_greedy(g).0,
        }
    }

    /// Runs the attempt and checks it.
    fn try_color(&self, g: &Graph) -> Option<Vec<usize>> {
        let c = (self.attempt)(g);
        let ok = c.len() == g.n()
            && c.iter().all(|&x| x < self.budget)
            && g.edges().all(|(u, v)| c[u] != c[v]);
        ok.then_some(c)
    }
}

fn bfs_parity(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != usize::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &u in g.neighbors(v) {
                if color[u] == usize::MAX {
                    color[u] = 1 - color[v];
                    queue.push_back(u);
                }
            }
        }
    }
    color
}

/// Vertices in id order. Each new vertex first tries every `budget`-subset S
/// of the colours in use, in lexicographic order: the oracle recolours the
/// vertices coloured from S together with the new vertex using only S. If no
/// subset works the vertex opens a new colour.
pub fn color_with_class_oracle(g: &Graph, oracle: &ClassColoringOracle) -> ColoringSol {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut used = 0usize;
    for v in 0..n {
        let mut placed = false;
        for s in (0..used).combinations(oracle.budget) {
            let mut part = VertexSet::from_vertices(n, (0..v).filter(|&u| s.contains(&color[u])));
            part.insert(v);
            let sub = g.induced_subgraph(&part);
            if let Some(c) = oracle.try_color(&sub.graph) {
                for (i, &u) in sub.map.iter().enumerate() {
                    color[u] = s[c[i]];
                }
                placed = true;
                break;
            }
        }
        if !placed {
            color[v] = used;
            used += 1;
        }
    }
    ColoringSol::normalized(&color, "class-oracle")
}

/// Smallest-available-colour greedy along the reverse degeneracy order.
/// Returns 0-based colours and the count.
fn degeneracy_greedy(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let (order, _) = g.degeneracy_order();
    let mut color = vec![usize::MAX; n];
    let mut used = 0;
    for &v in order.iter().rev() {
        let taken: Vec<usize> = g.neighbors(v).iter().map(|&u| color[u]).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("unbounded range");
        color[v] = c;
        used = used.max(c + 1);
    }
    (color, used)
}

/// At most degeneracy + 1 colours.
pub fn color_degeneracy(g: &Graph) -> ColoringSol {
    ColoringSol::normalized(&degeneracy_greedy(g).0, "degeneracy-greedy")
}

/// Maximal independent set of `g[alive]` containing `seed`, extended in
/// ascending id order.
fn grow_independent(g: &Graph, alive: &VertexSet, seed: &VertexSet) -> VertexSet {
    let mut set = seed.clone();
    let mut blocked = VertexSet::new(g.n());
    for v in seed {
        blocked.union_with(g.neighbor_set(v));
    }
    for v in alive {
        if !set.contains(v) && !blocked.contains(v) {
            set.insert(v);
            blocked.union_with(g.neighbor_set(v));
        }
    }
    set
}

/// Repeatedly removes a maximal independent set built in ascending id
/// order, one colour each.
pub fn color_greedy_mis(g: &Graph) -> ColoringSol {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut alive = g.vertices();
    let mut c = 0;
    while !alive.is_empty() {
        let class = grow_independent(g, &alive, &VertexSet::new(n));
        for v in &class {
            color[v] = c;
        }
        alive.difference_with(&class);
        c += 1;
    }
    ColoringSol::normalized(&color, "greedy-mis")
}

/// While three pairwise non-adjacent vertices remain, one colour goes to a
/// maximal independent set through the first such triple. The rest has
/// independence number at most two and is coloured optimally from a maximum
/// matching of its complement.
pub fn color_p3k1free(g: &Graph) -> ColoringSol {
    let n = g.n();
    let mut color = vec![0usize; n];
    let mut alive = g.vertices();
    let mut c = 0;
    loop {
        let rest = g.induced_subgraph(&alive);
        let Some(t) = find_co_triangle(&rest.graph) else {
            let m = max_matching(&rest.graph.complement());
            let mut done = VertexSet::new(rest.graph.n());
            for (a, b) in m.edges {
                color[rest.map[a]] = c;
                color[rest.map[b]] = c;
                done.insert(a);
                done.insert(b);
                c += 1;
            }
            for v in done.complement().iter() {
                color[rest.map[v]] = c;
                c += 1;
            }
            break;
        };
        let seed = VertexSet::from_vertices(n, t.iter().map(|&v| rest.map[v]));
        let class = grow_independent(g, &alive, &seed);
        for v in &class {
            color[v] = c;
        }
        alive.difference_with(&class);
        c += 1;
    }
    ColoringSol::normalized(&color, "p3k1-two-phase")
}

/// Complement of the chain of triangles {x_i, y_i, z_i} linked by edges
/// y_i - x_{i+1}. Labels are chosen so that ascending-id maximal independent
/// sets pick the pairs {y_i, x_{i+1}} first, which costs 2n - 1 colours
/// while n suffice.
pub fn cochordal_tight_family(n: usize) -> Graph {
    assert!(n >= 2, "the family starts at two triangles");
    let mut x = vec![0usize; n];
    let mut y = vec![0usize; n];
    let mut z = vec![0usize; n];
    for i in 0..n - 1 {
        y[i] = 2 * i;
        x[i + 1] = 2 * i + 1;
    }
    x[0] = 2 * n - 2;
    z[0] = 2 * n - 1;
    y[n - 1] = 2 * n;
    z[n - 1] = 2 * n + 1;
    for (j, zi) in z.iter_mut().enumerate().take(n - 1).skip(1) {
        *zi = 2 * n + 1 + j;
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.extend([(x[i], y[i]), (y[i], z[i]), (x[i], z[i])]);
        if i + 1 < n {
            edges.push((y[i], x[i + 1]));
        }
    }
    Graph::from_edges(3 * n, edges)
        .expect("chain of triangles is simple")
        .complement()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proper(g: &Graph, s: &ColoringSol) -> bool {
        g.edges().all(|(u, v)| s.color[u] != s.color[v])
    }

    #[test]
    fn oracle_examples() {
        let bip = ClassColoringOracle::bipartite();
        let c6 = Graph::cycle(6);
        assert!(color_with_class_oracle(&c6, &bip).colors_used <= 2);
        let c5 = Graph::cycle(5);
        let s = color_with_class_oracle(&c5, &bip);
        assert!(proper(&c5, &s) && s.colors_used <= 3);
        let k5 = Graph::complete(5);
        assert_eq!(color_with_class_oracle(&k5, &bip).colors_used, 5);
    }

    #[test]
    fn degeneracy_examples() {
        assert!(color_degeneracy(&Graph::path(7)).colors_used <= 2);
        let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(color_degeneracy(&diamond).colors_used, 3);
    }

    #[test]
    fn mis_on_multipartite() {
        let g = Graph::complete_bipartite(2, 3).join(&Graph::empty(2));
        assert_eq!(color_greedy_mis(&g).colors_used, 3);
    }

    #[test]
    fn p3k1_examples() {
        assert_eq!(color_p3k1free(&Graph::cycle(5)).colors_used, 3);
        assert_eq!(color_p3k1free(&Graph::cycle(4)).colors_used, 2);
        assert_eq!(color_p3k1free(&Graph::empty(6)).colors_used, 1);
    }

    #[test]
    fn tight_family_uses_2n_minus_1() {
        for n in 2..=5 {
            let g = cochordal_tight_family(n);
            let s = color_greedy_mis(&g);
            assert!(proper(&g, &s));
            assert_eq!(s.colors_used, 2 * n - 1);
        }
    }
}
