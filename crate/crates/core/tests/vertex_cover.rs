mod common;

use itertools::Itertools;

use epa::check::is_two_maximal_brute;
use epa::oracle::{exact_min_modulator, exact_min_wvc, OracleBudget};
use epa::recognize::ClassTag;
use epa::vc::{
    independent_set_from_cover, is_two_maximal, two_maximal_clique, vc_budgeted_2approx,
    vc_chordal, vc_fvs, vc_local_ratio_ffree, vc_split, FFreeConfig,
};
use epa::weight::{int, ratio};
use epa::{Graph, VertexSet, WeightFn};

use common::{class_member, mixed_graph, weights_for};

fn b() -> OracleBudget {
    OracleBudget::default()
}

fn opt(g: &Graph, w: &WeightFn) -> epa::Weight {
    exact_min_wvc(g, w, &b()).unwrap().0
}

#[test]
fn local_ratio_examples() {
    let c5 = Graph::cycle(5);
    let w = WeightFn::unit(5);
    let cvd = exact_min_modulator(&c5, ClassTag::Cluster, None, &b())
        .unwrap()
        .0;
    assert_eq!(cvd, int(2));
    let sol = vc_local_ratio_ffree(&c5, &w, &FFreeConfig::cluster());
    assert!(sol.weight <= int(3) + int(2) * cvd);
    assert!(c5.is_vertex_cover(&sol.cover));
}

#[test]
fn local_ratio_is_exact_without_pattern() {
    for (class, cfg) in [
        (ClassTag::Cograph, FFreeConfig::cograph()),
        (ClassTag::Cluster, FFreeConfig::cluster()),
        (ClassTag::Cocluster, FFreeConfig::cocluster()),
    ] {
        for seed in 0..100u64 {
            let g = class_member(class, seed + 11, 1, 12);
            let w = weights_for(seed, g.n());
            assert_eq!(
                vc_local_ratio_ffree(&g, &w, &cfg).weight,
                opt(&g, &w),
                "{class} seed {seed}"
            );
        }
    }
}

#[test]
fn fvs_pipeline_examples() {
    let k3 = Graph::complete(3);
    assert!(vc_fvs(&k3, &WeightFn::unit(3)).weight <= int(3));
    let c4 = Graph::cycle(4);
    assert!(vc_fvs(&c4, &WeightFn::unit(4)).weight <= int(3));
}

#[test]
fn chordal_examples() {
    let k3 = Graph::complete(3);
    assert!(vc_chordal(&k3, &WeightFn::unit(3)).weight <= int(3));
    // on triangle-free inputs the triangle phase does nothing
    for seed in 0..100u64 {
        let g = class_member(ClassTag::TriangleFree, seed + 40, 1, 10);
        let w = weights_for(seed, g.n());
        assert_eq!(
            vc_chordal(&g, &w).weight,
            vc_fvs(&g, &w).weight,
            "seed {seed}"
        );
    }
}

#[test]
fn chordal_bound_on_n9() {
    for seed in 0..500u64 {
        let mut rng = epa::generate::SplitMix64::new(seed);
        let g = epa::generate::random_graph(9, 0.5, &mut rng);
        let w = weights_for(seed, 9);
        let k = exact_min_modulator(&g, ClassTag::Chordal, Some(&w), &b())
            .unwrap()
            .0;
        assert!(
            vc_chordal(&g, &w).weight <= opt(&g, &w) * ratio(3, 2) + k,
            "seed {seed}"
        );
    }
}

#[test]
fn two_maximal_clique_examples() {
    assert_eq!(two_maximal_clique(&Graph::complete(4)).len(), 4);
    let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    let z = two_maximal_clique(&paw);
    assert_eq!(z.to_vec(), vec![0, 1, 2]);
    assert!(is_two_maximal_brute(&paw, &z));
    let c6 = Graph::cycle(6);
    for (u, v) in c6.edges() {
        assert!(is_two_maximal_brute(
            &c6,
            &VertexSet::from_vertices(6, [u, v])
        ));
    }
}

#[test]
fn two_maximal_clique_passes_brute_check() {
    for seed in 0..1000u64 {
        let g = mixed_graph(seed + 100, 12);
        let z = two_maximal_clique(&g);
        assert!(is_two_maximal_brute(&g, &z), "seed {seed}");
        assert!(is_two_maximal(&g, &z));
    }
}

#[test]
fn library_two_maximality_agrees_with_brute_force() {
    for seed in 0..200u64 {
        let g = mixed_graph(seed + 7000, 8);
        let n = g.n();
        for size in 1..=n.min(4) {
            for vs in (0..n).combinations(size) {
                let z = VertexSet::from_vertices(n, vs);
                assert_eq!(
                    is_two_maximal(&g, &z),
                    is_two_maximal_brute(&g, &z),
                    "seed {seed}"
                );
            }
        }
    }
}

#[test]
fn budgeted_examples_and_bound() {
    let c5 = Graph::cycle(5);
    assert!(vc_budgeted_2approx(&c5, 2).cover.len() <= 4);
    for seed in 0..600u64 {
        let g = mixed_graph(seed + 200, 10);
        let unit = WeightFn::unit(g.n());
        let o = exact_min_wvc(&g, &unit, &b()).unwrap().1.len();
        for c in 0..=3 {
            let s = vc_budgeted_2approx(&g, c);
            assert!(g.is_vertex_cover(&s.cover));
            assert!(
                s.cover.len() <= o.max((2 * o).saturating_sub(c)),
                "seed {seed} c {c}"
            );
            if o <= c {
                assert_eq!(s.cover.len(), o, "seed {seed} c {c}");
            }
        }
    }
}

#[test]
fn split_examples() {
    let star = Graph::star(3);
    let s = vc_split(&star);
    assert_eq!(s.cover.to_vec(), vec![0]);
    for seed in 0..300u64 {
        let g = class_member(ClassTag::Split, seed + 300, 1, 12);
        assert_eq!(
            vc_split(&g).weight,
            opt(&g, &WeightFn::unit(g.n())),
            "seed {seed}"
        );
    }
}

#[test]
fn independent_set_examples() {
    let k3 = Graph::complete(3);
    let w = WeightFn::unit(3);
    let mut everything = vc_split(&k3);
    everything.cover = k3.vertices();
    assert!(independent_set_from_cover(&k3, &everything)
        .unwrap()
        .is_empty());
    let sol = vc_split(&k3);
    let is = independent_set_from_cover(&k3, &sol).unwrap();
    assert_eq!(is.len(), 1);
    assert_eq!(w.total(&is), w.sum() - &sol.weight);

    let bip = Graph::complete_bipartite(2, 4);
    let sol = vc_fvs(&bip, &WeightFn::unit(6));
    let is = independent_set_from_cover(&bip, &sol).unwrap();
    assert_eq!(is.len(), 4);
    assert!(bip.is_independent(&is));

    let mut bad = sol.clone();
    bad.cover = VertexSet::new(6);
    assert!(independent_set_from_cover(&bip, &bad).is_err());
}
