//! Exponential-time exact solvers used as ground truth. They work on vertex
//! bitmasks directly and share no code with the algorithms they check.

use std::cmp::Ordering;

use num::{BigInt, Integer, One, ToPrimitive};

use crate::color::ColoringSol;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pack::TrianglePackingSol;
use crate::recognize::ClassTag;
use crate::vc::Trace;
use crate::vertex_set::VertexSet;
use crate::weight::{Weight, WeightFn};

/// Largest instance each oracle accepts, plus a cap on enumeration steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub vc: usize,
    pub cvc: usize,
    pub tp: usize,
    pub coloring: usize,
    pub modulator: usize,
    pub lp: usize,
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            vc: 12,
            cvc: 12,
            tp: 12,
            coloring: 11,
            modulator: 10,
            lp: 10,
            max_steps: 50_000_000,
        }
    }
}

impl OracleBudget {
    /// Every per-problem limit set to `n`.
    pub fn uniform(n: usize) -> Self {
        OracleBudget {
            vc: n,
            cvc: n,
            tp: n,
            coloring: n,
            modulator: n,
            lp: n,
            ..OracleBudget::default()
        }
    }
}

fn check(what: &'static str, n: usize, limit: usize) -> Result<()> {
    // masks are u32, so 31 is a hard ceiling
    if n > limit || n > 31 {
        return Err(Error::OverBudget { what, n, limit });
    }
    Ok(())
}

fn check_steps(what: &'static str, n: usize, steps: u64, budget: &OracleBudget) -> Result<()> {
    if steps > budget.max_steps {
        return Err(Error::OverBudget {
            what,
            n,
            limit: budget.max_steps.min(usize::MAX as u64) as usize,
        });
    }
    Ok(())
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &u| m | 1 << u))
        .collect()
}

fn to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_vertices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

/// Lexicographic order of the ascending element lists of two masks.
fn lex(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let low = (a ^ b).trailing_zeros();
    // the set holding the first differing element is smaller, unless the
    // other set has simply ended there
    let below = (1u32 << low) - 1;
    let (a_rest, b_rest) = (a & !below, b & !below);
    if a_rest >> low & 1 == 1 {
        if b_rest == 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    } else if a_rest == 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// Weights scaled to integers by the common denominator.
fn scaled(w: &WeightFn) -> (Vec<i128>, BigInt) {
    let denom = w
        .as_slice()
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints = w
        .as_slice()
        .iter()
        .map(|x| {
            (x * Weight::from_integer(denom.clone()))
                .to_integer()
                .to_i128()
                .expect("scaled weight fits in i128")
        })
        .collect();
    (ints, denom)
}

fn unscale(value: i128, denom: &BigInt) -> Weight {
    Weight::new(BigInt::from(value), denom.clone())
}

fn mask_weight(mask: u32, ints: &[i128]) -> i128 {
    (0..ints.len())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| ints[v])
        .sum()
}

/// Best mask under (primary key, size, lex) among those accepted by `ok`.
fn best_mask(
    n: usize,
    ints: &[i128],
    by_size_first: bool,
    ok: impl Fn(u32) -> bool,
) -> Option<u32> {
    let mut best: Option<(u32, i128)> = None;
    for mask in 0u32..(1u32 << n) {
        if !ok(mask) {
            continue;
        }
        let wt = mask_weight(mask, ints);
        let better = match best {
            None => true,
            Some((b, bw)) => {
                let key = |m: u32, x: i128| {
                    if by_size_first {
                        (m.count_ones() as i128, x)
                    } else {
                        (x, m.count_ones() as i128)
                    }
                };
                match key(mask, wt).cmp(&key(b, bw)) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => lex(mask, b).is_lt(),
                }
            }
        };
        if better {
            best = Some((mask, wt));
        }
    }
    best.map(|(m, _)| m)
}

fn is_cover(adj: &[u32], mask: u32) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 1 || adj[v] & !mask == 0)
}

fn is_connected_mask(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = 1u32 << mask.trailing_zeros();
    loop {
        let mut grow = seen;
        for v in 0..adj.len() {
            if seen >> v & 1 == 1 {
                grow |= adj[v] & mask;
            }
        }
        if grow == seen {
            return seen == mask;
        }
        seen = grow;
    }
}

/// Minimum-weight vertex cover; ties go to fewer vertices, then lex order.
pub fn exact_min_wvc(
    g: &Graph,
    w: &WeightFn,
    budget: &OracleBudget,
) -> Result<(Weight, VertexSet)> {
    let n = g.n();
    check("vertex cover", n, budget.vc)?;
    let adj = masks(g);
    let (ints, denom) = scaled(w);
    let m = best_mask(n, &ints, false, |mask| is_cover(&adj, mask)).expect("V is a cover");
    Ok((unscale(mask_weight(m, &ints), &denom), to_set(n, m)))
}

/// Minimum connected vertex cover of a connected graph.
pub fn exact_min_cvc(g: &Graph, budget: &OracleBudget) -> Result<(usize, VertexSet)> {
    let n = g.n();
    check("connected vertex cover", n, budget.cvc)?;
    let adj = masks(g);
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    if n == 0 || !is_connected_mask(&adj, full) {
        return Err(Error::Disconnected);
    }
    let ints = vec![1; n];
    let m = best_mask(n, &ints, true, |mask| {
        is_cover(&adj, mask) && is_connected_mask(&adj, mask)
    })
    .expect("V is a connected cover");
    Ok((m.count_ones() as usize, to_set(n, m)))
}

/// Chromatic number by dynamic programming over vertex subsets.
pub fn exact_chromatic(g: &Graph, budget: &OracleBudget) -> Result<(usize, ColoringSol)> {
    let n = g.n();
    check("chromatic number", n, budget.coloring)?;
    let adj = masks(g);
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for mask in 1..size as u32 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        independent[mask as usize] = independent[rest as usize] && adj[v] & rest == 0;
    }
    let mut dp = vec![u8::MAX; size];
    let mut choice = vec![0u32; size];
    dp[0] = 0;
    let mut steps = 0u64;
    for mask in 1..size as u32 {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // submasks of `rest`, each joined with the lowest vertex
        let mut sub = rest;
        loop {
            let s = sub | low;
            steps += 1;
            if independent[s as usize] {
                let cand = dp[(mask ^ s) as usize].saturating_add(1);
                if cand < dp[mask as usize] {
                    dp[mask as usize] = cand;
                    choice[mask as usize] = s;
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    check_steps("chromatic number", n, steps, budget)?;
    let mut color = vec![0usize; n];
    let mut mask = (size - 1) as u32;
    let mut c = 0;
    while mask != 0 {
        let s = choice[mask as usize];
        for (v, slot) in color.iter_mut().enumerate() {
            if s >> v & 1 == 1 {
                *slot = c;
            }
        }
        mask ^= s;
        c += 1;
    }
    let sol = ColoringSol::normalized(&color, "oracle");
    Ok((dp[size - 1] as usize, sol))
}

fn triangles(adj: &[u32]) -> Vec<u32> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u] >> v & 1 == 0 {
                continue;
            }
            for w in v + 1..n {
                if adj[u] >> w & 1 == 1 && adj[v] >> w & 1 == 1 {
                    out.push(1 << u | 1 << v | 1 << w);
                }
            }
        }
    }
    out
}

/// Maximum number of vertex-disjoint triangles.
pub fn exact_max_tp(g: &Graph, budget: &OracleBudget) -> Result<(usize, TrianglePackingSol)> {
    let n = g.n();
    check("triangle packing", n, budget.tp)?;
    let adj = masks(g);
    let tris = triangles(&adj);
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let mut memo = vec![u8::MAX; 1usize << n];
    let best = max_tp(full, &tris, &mut memo);
    let mut picked = Vec::new();
    let mut avail = full;
    while avail != 0 {
        let v = avail.trailing_zeros();
        let skip = avail & !(1 << v);
        let target = max_tp(avail, &tris, &mut memo);
        if max_tp(skip, &tris, &mut memo) == target {
            avail = skip;
            continue;
        }
        let t = tris
            .iter()
            .copied()
            .find(|&t| {
                t >> v & 1 == 1
                    && t & !avail == 0
                    && max_tp(avail & !t, &tris, &mut memo) + 1 == target
            })
            .expect("optimum is attained by some triangle");
        let vs: Vec<usize> = (0..n).filter(|&x| t >> x & 1 == 1).collect();
        picked.push([vs[0], vs[1], vs[2]]);
        avail &= !t;
    }
    Ok((
        best as usize,
        TrianglePackingSol {
            size: picked.len(),
            triangles: picked,
            trace: Trace {
                algorithm: "oracle",
                depth: 0,
            },
        },
    ))
}

fn max_tp(avail: u32, tris: &[u32], memo: &mut [u8]) -> u8 {
    if avail.count_ones() < 3 {
        return 0;
    }
    if memo[avail as usize] != u8::MAX {
        return memo[avail as usize];
    }
    let v = avail.trailing_zeros();
    let mut best = max_tp(avail & !(1 << v), tris, memo);
    for &t in tris {
        if t >> v & 1 == 1 && t & !avail == 0 {
            best = best.max(1 + max_tp(avail & !t, tris, memo));
        }
    }
    memo[avail as usize] = best;
    best
}

/// Maximum matching size by dynamic programming over vertex subsets.
pub fn exact_max_matching(g: &Graph, budget: &OracleBudget) -> Result<usize> {
    let n = g.n();
    check("matching", n, budget.vc)?;
    let adj = masks(g);
    let size = 1usize << n;
    let mut dp = vec![0u8; size];
    for mask in 1..size as u32 {
        let v = mask.trailing_zeros();
        let rest = mask & !(1 << v);
        let mut best = dp[rest as usize];
        let mut nb = adj[v as usize] & rest;
        while nb != 0 {
            let u = nb.trailing_zeros();
            best = best.max(1 + dp[(rest & !(1 << u)) as usize]);
            nb &= nb - 1;
        }
        dp[mask as usize] = best;
    }
    Ok(dp[size - 1] as usize)
}

/// Whether the graph induced by `mask` is itself a minimal forbidden
/// induced subgraph of `class`, read off edge and degree counts.
fn minimal_obstruction(adj: &[u32], mask: u32, class: ClassTag) -> bool {
    let k = mask.count_ones();
    let degs: Vec<u32> = (0..adj.len())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| (adj[v] & mask).count_ones())
        .collect();
    let edges: u32 = degs.iter().sum::<u32>() / 2;
    let sorted = {
        let mut d = degs.clone();
        d.sort_unstable();
        d
    };
    let is_cycle = k >= 3 && degs.iter().all(|&d| d == 2) && is_connected_mask(adj, mask);
    let co_is_cycle = k >= 3 && degs.iter().all(|&d| d == k - 3) && {
        let co: Vec<u32> = (0..adj.len()).map(|v| !adj[v] & mask & !(1 << v)).collect();
        is_connected_mask(&co, mask)
    };
    match class {
        ClassTag::Edgeless => k == 2 && edges == 1,
        ClassTag::Forest => is_cycle,
        ClassTag::Bipartite => is_cycle && k % 2 == 1,
        ClassTag::Chordal => is_cycle && k >= 4,
        ClassTag::Cochordal => co_is_cycle && k >= 4,
        ClassTag::Cluster => k == 3 && edges == 2,
        ClassTag::Cocluster => k == 3 && edges == 1,
        ClassTag::Cograph => k == 4 && sorted == [1, 1, 2, 2],
        ClassTag::Split => {
            (k == 4 && sorted == [1, 1, 1, 1]) || (k == 4 && is_cycle) || (k == 5 && is_cycle)
        }
        ClassTag::TriangleFree => k == 3 && edges == 3,
        ClassTag::CoTriangleFree => k == 3 && edges == 0,
        ClassTag::P3k1Free => k == 4 && sorted == [0, 1, 1, 2],
    }
}

/// Class membership of every induced subgraph, indexed by vertex mask.
fn membership_table(adj: &[u32], class: ClassTag) -> Vec<bool> {
    let size = 1usize << adj.len();
    let mut member = vec![true; size];
    for mask in 1..size as u32 {
        let mut ok = !minimal_obstruction(adj, mask, class);
        let mut rest = mask;
        while ok && rest != 0 {
            let v = rest.trailing_zeros();
            ok = member[(mask & !(1 << v)) as usize];
            rest &= rest - 1;
        }
        member[mask as usize] = ok;
    }
    member
}

/// Brute-force class membership, independent of the recognizers.
pub fn oracle_member(g: &Graph, class: ClassTag, budget: &OracleBudget) -> Result<bool> {
    let n = g.n();
    check("membership", n, budget.modulator)?;
    let adj = masks(g);
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    Ok(membership_table(&adj, class)[full as usize])
}

/// Minimum modulator to `class`: fewest vertices (or least weight when `w`
/// is given, then fewest vertices), ties broken lexicographically.
pub fn exact_min_modulator(
    g: &Graph,
    class: ClassTag,
    w: Option<&WeightFn>,
    budget: &OracleBudget,
) -> Result<(Weight, VertexSet)> {
    let n = g.n();
    check("modulator", n, budget.modulator)?;
    let adj = masks(g);
    let member = membership_table(&adj, class);
    let full = if n == 0 { 0 } else { u32::MAX >> (32 - n) };
    let unit = WeightFn::unit(n);
    let (ints, denom) = scaled(w.unwrap_or(&unit));
    let m = best_mask(n, &ints, w.is_none(), |mask| {
        member[(full & !mask) as usize]
    })
    .expect("deleting everything lands in every class");
    Ok((unscale(mask_weight(m, &ints), &denom), to_set(n, m)))
}

/// Optimum of the vertex cover LP, found over all {0, 1/2, 1} vectors.
pub fn exact_lp_vc(g: &Graph, w: &WeightFn, budget: &OracleBudget) -> Result<Weight> {
    let n = g.n();
    check("LP", n, budget.lp)?;
    let (ints, denom) = scaled(w);
    let mut x = vec![0u8; n];
    let mut best = i128::MAX;
    lp_search(g, &ints, 0, 0, &mut x, &mut best);
    // `best` is in doubled units
    Ok(unscale(best, &(denom * 2)))
}

fn lp_search(g: &Graph, ints: &[i128], v: usize, cost: i128, x: &mut [u8], best: &mut i128) {
    if cost >= *best {
        return;
    }
    if v == x.len() {
        *best = cost;
        return;
    }
    // smallest value compatible with earlier neighbours
    let need = g
        .neighbors(v)
        .iter()
        .filter(|&&u| u < v)
        .map(|&u| 2 - x[u])
        .max()
        .unwrap_or(0);
    for value in need..=2 {
        x[v] = value;
        lp_search(g, ints, v + 1, cost + ints[v] * value as i128, x, best);
    }
}
