mod common;

use itertools::Itertools;

use epa::check::{is_connected_cover, is_two_maximal_brute};
use epa::cvc::{connected_subsets, cvc_budgeted, cvc_small_after_contraction, cvc_split};
use epa::oracle::{exact_min_cvc, exact_min_modulator, exact_min_wvc, oracle_member, OracleBudget};
use epa::recognize::ClassTag;
use epa::vc::two_maximal_clique;
use epa::{Error, Graph, VertexSet, WeightFn};

use common::{class_member, connected_graph};

fn b() -> OracleBudget {
    OracleBudget::default()
}

fn cvc(g: &Graph) -> usize {
    exact_min_cvc(g, &b()).unwrap().0
}

fn vc(g: &Graph) -> usize {
    exact_min_wvc(g, &WeightFn::unit(g.n()), &b())
        .unwrap()
        .1
        .len()
}

#[test]
fn small_after_contraction_examples() {
    let k4 = Graph::complete(4);
    let s = cvc_small_after_contraction(&k4, &k4.vertices(), 3).unwrap();
    assert_eq!(s.size, 3);
    assert!(is_connected_cover(&k4, &s.cover));

    let p4 = Graph::path(4);
    let z = VertexSet::from_vertices(4, [1, 2]);
    let s = cvc_small_after_contraction(&p4, &z, 3).unwrap();
    assert_eq!(s.cover.to_vec(), vec![1, 2]);

    let not_clique = VertexSet::from_vertices(4, [0, 2]);
    assert_eq!(
        cvc_small_after_contraction(&p4, &not_clique, 3),
        Err(Error::NotAClique)
    );
}

#[test]
fn small_after_contraction_is_exact() {
    let mut used = 0;
    for seed in 0..1500u64 {
        let g = connected_graph(seed + 400, 10);
        let z = two_maximal_clique(&g);
        if z.is_empty() {
            continue;
        }
        match cvc_small_after_contraction(&g, &z, 3) {
            Ok(s) => {
                used += 1;
                assert!(is_connected_cover(&g, &s.cover), "seed {seed}");
                assert_eq!(s.size, cvc(&g), "seed {seed}");
            }
            Err(Error::BudgetExceeded(3)) => {}
            Err(e) => panic!("seed {seed}: {e}"),
        }
    }
    assert!(used > 300, "only {used} instances met the precondition");
}

#[test]
fn budgeted_bound() {
    for seed in 0..400u64 {
        let g = connected_graph(seed + 500, 10);
        let (o_cvc, o_vc) = (cvc(&g), vc(&g));
        for c in 0..=4 {
            let s = cvc_budgeted(&g, c).unwrap();
            assert!(is_connected_cover(&g, &s.cover));
            let bound = o_cvc.max((o_cvc + o_vc).saturating_sub(c));
            assert!(s.size <= bound, "seed {seed} c {c}: {} > {bound}", s.size);
        }
    }
}

#[test]
fn split_examples() {
    assert_eq!(cvc_split(&Graph::empty(1)).unwrap().size, 0);
    assert_eq!(cvc_split(&Graph::star(4)).unwrap().size, 1);
    assert_eq!(cvc_split(&Graph::empty(3)), Err(Error::Disconnected));
    for seed in 0..300u64 {
        let g = class_member(ClassTag::Split, seed + 600, 1, 10);
        let s = cvc_split(&g).unwrap();
        assert!(is_connected_cover(&g, &s.cover));
        assert_eq!(s.size, cvc(&g), "seed {seed}");
    }
}

#[test]
fn connected_subsets_are_connected_and_complete() {
    let g = Graph::cycle(6);
    let subs = connected_subsets(&g, 3);
    // 6 singletons, 6 edges, 6 paths of three
    assert_eq!(subs.len(), 18);
    for s in &subs {
        assert!(g.induced_subgraph(s).graph.is_connected());
    }
}

fn cliques_of(g: &Graph, min: usize) -> Vec<VertexSet> {
    let n = g.n();
    (min..=n)
        .flat_map(|k| (0..n).combinations(k))
        .map(|vs| VertexSet::from_vertices(n, vs))
        .filter(|z| g.is_clique(z))
        .collect()
}

#[test]
fn contracting_a_clique_saves_its_size() {
    for seed in 0..150u64 {
        let g = connected_graph(seed + 700, 9);
        let base = cvc(&g);
        for z in cliques_of(&g, 2) {
            let h = g.contract_with_pendant(&z).unwrap().graph;
            assert!(
                cvc(&h) + z.len() <= base + 2,
                "seed {seed} z {:?}",
                z.to_vec()
            );
        }
    }
}

/// All minimum split modulators by plain enumeration.
fn all_min_split_modulators(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let k = exact_min_modulator(g, ClassTag::Split, None, &b())
        .unwrap()
        .1
        .len();
    (0..n)
        .combinations(k)
        .map(|vs| VertexSet::from_vertices(n, vs))
        .filter(|m| oracle_member(&g.delete(m).graph, ClassTag::Split, &b()).unwrap())
        .collect()
}

#[test]
fn contracting_a_clique_inside_a_modulator_lowers_svd() {
    let mut checked = 0;
    for seed in 0..600u64 {
        let g = connected_graph(seed + 800, 9);
        let svd = exact_min_modulator(&g, ClassTag::Split, None, &b())
            .unwrap()
            .0;
        let mods = all_min_split_modulators(&g);
        for z in cliques_of(&g, 2) {
            if !mods.iter().any(|m| z.is_subset(m)) {
                continue;
            }
            let h = g.contract_with_pendant(&z).unwrap().graph;
            let svd_h = exact_min_modulator(&h, ClassTag::Split, None, &b())
                .unwrap()
                .0;
            assert!(
                svd_h + epa::weight::int(1) <= svd,
                "seed {seed} z {:?}",
                z.to_vec()
            );
            checked += 1;
        }
    }
    assert!(checked > 100, "only {checked} cliques checked");
}

// Meeting a minimum modulator is not enough: contracting can merge the
// neighbourhoods of the modulator vertices into the new vertex.
#[test]
fn contracting_a_clique_that_only_meets_a_modulator_can_keep_svd() {
    let g = connected_graph(802, 9);
    let svd = exact_min_modulator(&g, ClassTag::Split, None, &b())
        .unwrap()
        .0;
    let z = VertexSet::from_vertices(g.n(), [0, 2]);
    assert!(g.is_clique(&z));
    assert!(all_min_split_modulators(&g)
        .iter()
        .any(|m| !m.is_disjoint(&z)));
    let h = g.contract_with_pendant(&z).unwrap().graph;
    assert_eq!(
        exact_min_modulator(&h, ClassTag::Split, None, &b())
            .unwrap()
            .0,
        svd
    );
}

#[test]
fn two_maximal_cliques_of_split_graphs_contract_to_small_covers() {
    for seed in 0..200u64 {
        let g = class_member(ClassTag::Split, seed + 900, 2, 12);
        let z = two_maximal_clique(&g);
        let h = g.contract_with_pendant(&z).unwrap().graph;
        assert!(vc(&h) <= 2, "seed {seed}");
        // every 2-maximal clique, for the smaller ones
        if g.n() <= 9 {
            for z in cliques_of(&g, 1)
                .into_iter()
                .filter(|z| is_two_maximal_brute(&g, z))
            {
                let h = g.contract_with_pendant(&z).unwrap().graph;
                assert!(vc(&h) <= 2, "seed {seed} z {:?}", z.to_vec());
            }
        }
    }
}
