use std::collections::VecDeque;

use num::{BigInt, Integer, One, Zero};
use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HalfValue {
    Zero,
    Half,
    One,
}

impl HalfValue {
    pub fn as_weight(self) -> Weight {
        match self {
            HalfValue::Zero => Weight::zero(),
            HalfValue::Half => Weight::new(BigInt::one(), BigInt::from(2)),
            HalfValue::One => Weight::one(),
        }
    }

    fn from_doubled(d: u8) -> Self {
        match d {
            0 => HalfValue::Zero,
            1 => HalfValue::Half,
            _ => HalfValue::One,
        }
    }
}

/// An optimal solution of the vertex cover LP with values in {0, 1/2, 1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralLP {
    pub values: Vec<HalfValue>,
    pub objective: Weight,
    pub v0: VertexSet,
    pub v_half: VertexSet,
    pub v1: VertexSet,
}

impl HalfIntegralLP {
    pub fn is_feasible(&self, g: &Graph) -> bool {
        let doubled = |v: usize| match self.values[v] {
            HalfValue::Zero => 0,
            HalfValue::Half => 1,
            HalfValue::One => 2,
        };
        g.edges().all(|(u, v)| doubled(u) + doubled(v) >= 2)
    }
}

/// Minimum s-t cut on the bipartite double cover: s -> v_L and v_R -> t with
/// capacity w(v), u_L -> v_R unbounded for every edge orientation. With S the
/// source side, x_v = ([v_L not in S] + [v_R in S]) / 2.
pub fn lp_half_integral_vc(g: &Graph, w: &WeightFn) -> HalfIntegralLP {
    let n = g.n();
    let scale = w
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let caps: Vec<BigInt> = w
        .as_slice()
        .iter()
        .map(|x| (x * Weight::from_integer(scale.clone())).to_integer())
        .collect();
    let infinite: BigInt = caps.iter().sum::<BigInt>() + 1;

    let (s, t) = (2 * n, 2 * n + 1);
    let mut net = FlowNetwork::new(2 * n + 2);
    for v in 0..n {
        net.add_arc(s, v, caps[v].clone());
        net.add_arc(n + v, t, caps[v].clone());
    }
    for (u, v) in g.edges() {
        net.add_arc(u, n + v, infinite.clone());
        net.add_arc(v, n + u, infinite.clone());
    }
    net.max_flow(s, t);
    let source_side = net.reachable(s);

    let mut values = Vec::with_capacity(n);
    let mut parts = [VertexSet::new(n), VertexSet::new(n), VertexSet::new(n)];
    for v in 0..n {
        let d = u8::from(!source_side[v]) + u8::from(source_side[n + v]);
        parts[d as usize].insert(v);
        values.push(HalfValue::from_doubled(d));
    }
    let objective = values
        .iter()
        .enumerate()
        .fold(Weight::zero(), |acc, (v, x)| acc + w.get(v) * x.as_weight());
    let [v0, v_half, v1] = parts;
    HalfIntegralLP {
        values,
        objective,
        v0,
        v_half,
        v1,
    }
}

struct Arc {
    to: usize,
    cap: BigInt,
}

/// Dinic's algorithm over exact integer capacities.
struct FlowNetwork {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl FlowNetwork {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: BigInt) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: BigInt::zero(),
        });
    }

    fn levels(&self, s: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &a in &self.out[v] {
                let arc = &self.arcs[a];
                if arc.cap > BigInt::zero() && level[arc.to] == usize::MAX {
                    level[arc.to] = level[v] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        level
    }

    fn max_flow(&mut self, s: usize, t: usize) {
        loop {
            let level = self.levels(s);
            if level[t] == usize::MAX {
                return;
            }
            let mut next = vec![0usize; self.out.len()];
            while self.augment(s, t, &level, &mut next) {}
        }
    }

    /// Finds one blocking-flow path with an explicit stack and pushes its
    /// bottleneck. Returns false once the level graph is saturated.
    fn augment(&mut self, s: usize, t: usize, level: &[usize], next: &mut [usize]) -> bool {
        let mut path: Vec<usize> = Vec::new();
        let mut v = s;
        loop {
            if v == t {
                let bottleneck = path
                    .iter()
                    .map(|&a| &self.arcs[a].cap)
                    .min()
                    .expect("path to sink is nonempty")
                    .clone();
                for &a in &path {
                    self.arcs[a].cap -= &bottleneck;
                    self.arcs[a ^ 1].cap += &bottleneck;
                }
                return true;
            }
            let mut advanced = false;
            while next[v] < self.out[v].len() {
                let a = self.out[v][next[v]];
                let arc = &self.arcs[a];
                if arc.cap > BigInt::zero() && level[arc.to] == level[v] + 1 {
                    path.push(a);
                    v = arc.to;
                    advanced = true;
                    break;
                }
                next[v] += 1;
            }
            if !advanced {
                if v == s {
                    return false;
                }
                let a = path.pop().expect("non-source vertex was entered by an arc");
                v = self.arcs[a ^ 1].to;
                next[v] += 1;
            }
        }
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        self.levels(s)
            .into_iter()
            .map(|l| l != usize::MAX)
            .collect()
    }
}
