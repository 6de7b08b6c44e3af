//! One line per acceptance criterion. Exits non-zero if any fails.

mod common;

use std::process::{Command, ExitCode};
use std::time::Instant;

use num::{One, Zero};

use epa::check::{is_connected_cover, is_cover, is_proper_coloring, is_triangle_packing};
use epa::color::{
    cochordal_tight_family, color_degeneracy, color_greedy_mis, color_p3k1free,
    color_with_class_oracle, ClassColoringOracle,
};
use epa::cvc::{cvc_budgeted, cvc_split};
use epa::oracle::{
    exact_chromatic, exact_lp_vc, exact_max_matching, exact_max_tp, exact_min_cvc,
    exact_min_modulator, exact_min_wvc, OracleBudget,
};
use epa::pack::{tp_3maximal, tp_maximal};
use epa::recognize::ClassTag;
use epa::solvers::{
    cvc_savage, fvs_2approx, lp_half_integral_vc, max_matching, vc_2approx, HalfValue,
};
use epa::vc::{
    vc_budgeted_2approx, vc_chordal, vc_fvs, vc_local_ratio_ffree, vc_split, FFreeConfig,
};
use epa::weight::{int, ratio};
use epa::{Graph, Weight, WeightFn};

use common::{class_member, connected_graph, is_forest, min_cover_with, mixed_graph, weights_for};

/// Counts checks and keeps the first few failures.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: usize,
    first: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures += 1;
            if self.first.len() < 3 {
                self.first.push(what());
            }
        }
    }

    fn finish(self, summary: String) -> Result<String, String> {
        if self.failures == 0 {
            Ok(format!("{summary}, {} checks, 0 violations", self.checks))
        } else {
            Err(format!(
                "{summary}, {} checks, {} violations, e.g. {}",
                self.checks,
                self.failures,
                self.first.join("; ")
            ))
        }
    }
}

fn budget() -> OracleBudget {
    OracleBudget::default()
}

fn modulator(g: &Graph, class: ClassTag, w: Option<&WeightFn>) -> (Weight, epa::VertexSet) {
    exact_min_modulator(g, class, w, &budget()).expect("within budget")
}

fn chi(g: &Graph) -> usize {
    exact_chromatic(g, &budget()).expect("within budget").0
}

fn feasibility() -> Result<String, String> {
    let mut t = Tally::default();
    let graphs = 5000u64;
    let bip = ClassColoringOracle::bipartite();
    let five = ClassColoringOracle::five_degenerate();
    for seed in 0..graphs {
        let g = mixed_graph(seed, 16);
        let w = weights_for(seed, g.n());
        let tag = |alg: &str| format!("seed {seed}: {alg}");
        for (name, sol) in [
            (
                "lr-cograph",
                vc_local_ratio_ffree(&g, &w, &FFreeConfig::cograph()),
            ),
            (
                "lr-cluster",
                vc_local_ratio_ffree(&g, &w, &FFreeConfig::cluster()),
            ),
            (
                "lr-cocluster",
                vc_local_ratio_ffree(&g, &w, &FFreeConfig::cocluster()),
            ),
            ("vc-fvs", vc_fvs(&g, &w)),
            ("vc-chordal", vc_chordal(&g, &w)),
        ] {
            t.check(
                is_cover(&g, &sol.cover) && w.total(&sol.cover) == sol.weight,
                || tag(name),
            );
        }
        let s = vc_split(&g);
        t.check(
            is_cover(&g, &s.cover) && s.weight == int(s.cover.len() as i64),
            || tag("vc-split"),
        );
        t.check(is_cover(&g, &vc_2approx(&g, &w)), || tag("vc-2approx"));
        t.check(is_cover(&g, &vc_budgeted_2approx(&g, 2).cover), || {
            tag("budgeted")
        });

        let h = connected_graph(seed, 16);
        let c = cvc_split(&h).expect("connected");
        t.check(
            is_connected_cover(&h, &c.cover) && c.size == c.cover.len(),
            || tag("cvc-split"),
        );
        t.check(
            is_connected_cover(&h, &cvc_savage(&h).expect("connected")),
            || tag("savage"),
        );
        t.check(
            is_connected_cover(&h, &cvc_budgeted(&h, 2).expect("connected").cover),
            || tag("cvc-budgeted"),
        );

        for (name, sol) in [
            ("class-oracle-2", color_with_class_oracle(&g, &bip)),
            ("class-oracle-6", color_with_class_oracle(&g, &five)),
            ("degeneracy", color_degeneracy(&g)),
            ("greedy-mis", color_greedy_mis(&g)),
            ("p3k1", color_p3k1free(&g)),
        ] {
            t.check(is_proper_coloring(&g, &sol.color, sol.colors_used), || {
                tag(name)
            });
        }

        for (name, sol) in [
            ("tp-maximal", tp_maximal(&g)),
            ("tp-3maximal", tp_3maximal(&g)),
        ] {
            t.check(
                is_triangle_packing(&g, &sol.triangles) && sol.size == sol.triangles.len(),
                || tag(name),
            );
        }

        t.check(lp_half_integral_vc(&g, &w).is_feasible(&g), || tag("lp"));
        let f = fvs_2approx(&g, &w);
        t.check(is_forest(&g.delete(&f).graph), || tag("fvs"));
        t.check(max_matching(&g).is_valid(&g), || tag("matching"));
    }
    t.finish(format!("{graphs} graphs with n <= 16"))
}

fn vc_bounds() -> Result<String, String> {
    let mut t = Tally::default();
    let instances = 2000u64;
    let two = int(2);
    for seed in 0..instances {
        let g = mixed_graph(10_000 + seed, 10);
        let w = weights_for(seed, g.n());
        let unit = WeightFn::unit(g.n());
        let opt = exact_min_wvc(&g, &w, &budget()).unwrap().0;
        let opt_unit = exact_min_wvc(&g, &unit, &budget()).unwrap().0;
        let k = |class| modulator(&g, class, Some(&w)).0;
        let tag = |alg: &str, v: &Weight, b: &Weight| format!("seed {seed} {alg}: {v} > {b}");

        let v = vc_fvs(&g, &w).weight;
        let b = &opt + k(ClassTag::Forest);
        t.check(v <= b, || tag("vc_fvs", &v, &b));

        let v = vc_chordal(&g, &w).weight;
        let b = &opt * ratio(3, 2) + k(ClassTag::Chordal);
        t.check(v <= b, || tag("vc_chordal", &v, &b));

        let v = vc_split(&g).weight;
        let b = &opt_unit + modulator(&g, ClassTag::Split, None).0;
        t.check(v <= b, || tag("vc_split", &v, &b));

        for (cfg, class) in [
            (FFreeConfig::cluster(), ClassTag::Cluster),
            (FFreeConfig::cocluster(), ClassTag::Cocluster),
            (FFreeConfig::cograph(), ClassTag::Cograph),
        ] {
            let v = vc_local_ratio_ffree(&g, &w, &cfg).weight;
            let b = &opt + &two * k(class);
            t.check(v <= b, || tag(class.name(), &v, &b));
        }
    }
    t.finish(format!(
        "{instances} instances with n <= 10, half with rational weights"
    ))
}

fn cvc_bound() -> Result<String, String> {
    let mut t = Tally::default();
    let graphs = 1000u64;
    for seed in 0..graphs {
        let g = connected_graph(20_000 + seed, 10);
        let sol = cvc_split(&g).unwrap();
        let opt = exact_min_cvc(&g, &budget()).unwrap().0;
        let k = modulator(&g, ClassTag::Split, None).0;
        let b = int(opt as i64) + k;
        t.check(int(sol.size as i64) <= b, || {
            format!("seed {seed}: {} > {b}", sol.size)
        });
    }
    t.finish(format!("{graphs} connected graphs with n <= 10"))
}

fn coloring_bounds() -> Result<String, String> {
    let mut t = Tally::default();
    let graphs = 2000u64;
    let bip = ClassColoringOracle::bipartite();
    for seed in 0..graphs {
        let g = mixed_graph(30_000 + seed, 10);
        let tag = |alg: &str, v: usize, b: &Weight| format!("seed {seed} {alg}: {v} > {b}");
        let rest_bound = |class: ClassTag| {
            let (k, m) = modulator(&g, class, None);
            (int(chi(&g.delete(&m).graph) as i64), k)
        };

        let v = color_with_class_oracle(&g, &bip).colors_used;
        let b = int(2) + modulator(&g, ClassTag::Bipartite, None).0;
        t.check(int(v as i64) <= b, || tag("class-oracle", v, &b));

        let (c, k) = rest_bound(ClassTag::Chordal);
        let v = color_degeneracy(&g).colors_used;
        let b = c + k;
        t.check(int(v as i64) <= b, || tag("degeneracy", v, &b));

        let v = color_greedy_mis(&g).colors_used;
        let (c, k) = rest_bound(ClassTag::Cograph);
        let b = c + k;
        t.check(int(v as i64) <= b, || tag("mis/cograph", v, &b));
        let (c, k) = rest_bound(ClassTag::Cochordal);
        let b = c * int(2) + k - Weight::one();
        t.check(int(v as i64) <= b, || tag("mis/cochordal", v, &b));

        let (c, k) = rest_bound(ClassTag::P3k1Free);
        let v = color_p3k1free(&g).colors_used;
        let b = c + k;
        t.check(int(v as i64) <= b, || tag("p3k1", v, &b));
    }
    t.finish(format!("{graphs} graphs with n <= 10"))
}

fn tight_family() -> Result<String, String> {
    let mut t = Tally::default();
    let wide = OracleBudget::uniform(12);
    let mut seen = Vec::new();
    for n in [3usize, 4] {
        let g = cochordal_tight_family(n);
        let (chi, _) = exact_chromatic(&g, &wide).unwrap();
        let used = color_greedy_mis(&g).colors_used;
        let (k, _) = exact_min_modulator(&g, ClassTag::Cochordal, None, &wide).unwrap();
        let bound = int(2 * chi as i64) + &k - Weight::one();
        t.check(chi == n, || format!("n={n}: chi {chi}"));
        t.check(used == 2 * n - 1, || format!("n={n}: greedy used {used}"));
        t.check(int(used as i64) <= bound, || {
            format!("n={n}: {used} > {bound}")
        });
        seen.push(format!("n={n}: chi={chi}, greedy={used}, k={k}"));
    }
    t.finish(seen.join("; "))
}

fn packing() -> Result<String, String> {
    let mut t = Tally::default();
    let graphs = 1000u64;
    for seed in 0..graphs {
        let g = mixed_graph(40_000 + seed, 10);
        let opt = exact_max_tp(&g, &budget()).unwrap().0 as i64;
        let cvd = modulator(&g, ClassTag::Cluster, None).0;
        let ccvd = modulator(&g, ClassTag::Cocluster, None).0;
        let v = tp_maximal(&g).size as i64;
        let b = int(opt) - cvd;
        t.check(int(v) >= b, || format!("seed {seed} maximal: {v} < {b}"));
        let v = tp_3maximal(&g).size as i64;
        let b = int(opt) - ccvd;
        t.check(int(v) >= b, || format!("seed {seed} 3-maximal: {v} < {b}"));
    }
    let coclusters = 500u64;
    for seed in 0..coclusters {
        let g = class_member(ClassTag::Cocluster, 45_000 + seed, 3, 12);
        let opt = exact_max_tp(&g, &budget()).unwrap().0;
        let v = tp_3maximal(&g).size;
        t.check(v == opt, || format!("cocluster seed {seed}: {v} != {opt}"));
    }
    t.finish(format!(
        "{graphs} graphs with n <= 10, {coclusters} coclusters with n <= 12"
    ))
}

fn subroutines() -> Result<String, String> {
    let mut t = Tally::default();
    let graphs = 1000u64;
    for seed in 0..graphs {
        let g = mixed_graph(50_000 + seed, 10);
        let w = weights_for(seed, g.n());
        let lp = lp_half_integral_vc(&g, &w);
        let exact = exact_lp_vc(&g, &w, &budget()).unwrap();
        t.check(lp.objective == exact, || {
            format!("seed {seed} lp: {} != {exact}", lp.objective)
        });
        let mut sum = Weight::zero();
        for v in 0..g.n() {
            sum += w.get(v) * lp.values[v].as_weight();
        }
        t.check(sum == lp.objective && lp.is_feasible(&g), || {
            format!("seed {seed} lp certificate")
        });

        let opt = exact_min_wvc(&g, &w, &budget()).unwrap().0;
        let persistent = min_cover_with(&g, &w, &lp.v1, &lp.v0);
        t.check(persistent.as_ref() == Some(&opt), || {
            format!("seed {seed} persistency")
        });
        t.check(
            (0..g.n()).all(|v| match lp.values[v] {
                HalfValue::Zero => lp.v0.contains(v),
                HalfValue::Half => lp.v_half.contains(v),
                HalfValue::One => lp.v1.contains(v),
            }),
            || format!("seed {seed} partition"),
        );

        let f = fvs_2approx(&g, &w);
        let fvs = modulator(&g, ClassTag::Forest, Some(&w)).0;
        let v = w.total(&f);
        t.check(v <= &fvs * int(2), || {
            format!("seed {seed} fvs: {v} > 2 * {fvs}")
        });

        let h = connected_graph(55_000 + seed, 10);
        let s = cvc_savage(&h).unwrap().len() as i64;
        let b = exact_min_cvc(&h, &budget()).unwrap().0 as i64
            + exact_min_wvc(&h, &WeightFn::unit(h.n()), &budget())
                .unwrap()
                .1
                .len() as i64;
        t.check(s <= b, || format!("seed {seed} savage: {s} > {b}"));
    }
    let matchings = 1000u64;
    for seed in 0..matchings {
        let g = mixed_graph(60_000 + seed, 12);
        let m = max_matching(&g);
        let opt = exact_max_matching(&g, &budget()).unwrap();
        t.check(m.is_valid(&g) && m.len() == opt, || {
            format!("seed {seed} matching: {} != {opt}", m.len())
        });
    }
    t.finish(format!(
        "{graphs} graphs with n <= 10, {matchings} matchings with n <= 12"
    ))
}

fn exact_on_class() -> Result<String, String> {
    let mut t = Tally::default();
    let per_class = 300u64;
    for seed in 0..per_class {
        let g = class_member(ClassTag::Split, 70_000 + seed, 1, 12);
        let unit = WeightFn::unit(g.n());
        let opt = exact_min_wvc(&g, &unit, &budget()).unwrap().0;
        let v = vc_split(&g).weight;
        t.check(v == opt, || format!("split seed {seed}: {v} != {opt}"));

        let f = class_member(ClassTag::Forest, 71_000 + seed, 1, 12);
        let w = weights_for(seed, f.n());
        let opt = exact_min_wvc(&f, &w, &budget()).unwrap().0;
        let v = vc_fvs(&f, &w).weight;
        t.check(v == opt, || format!("forest seed {seed}: {v} != {opt}"));

        let c = class_member(ClassTag::Cograph, 72_000 + seed, 1, 11);
        let opt = chi(&c);
        let v = color_greedy_mis(&c).colors_used;
        t.check(v == opt, || format!("cograph seed {seed}: {v} != {opt}"));

        let cc = class_member(ClassTag::Cocluster, 73_000 + seed, 1, 12);
        let opt = exact_max_tp(&cc, &budget()).unwrap().0;
        let v = tp_3maximal(&cc).size;
        t.check(v == opt, || format!("cocluster seed {seed}: {v} != {opt}"));
    }
    t.finish(format!("{per_class} instances per class"))
}

fn bench_output(args: &[&str]) -> Result<Vec<u8>, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_epa"))
        .arg("bench")
        .args(args)
        .output()
        .map_err(|e| format!("cannot run epa: {e}"))?;
    if !out.status.success() {
        return Err(format!(
            "epa bench failed: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    Ok(out.stdout)
}

fn determinism() -> Result<String, String> {
    let mut t = Tally::default();
    let configs: [&[&str]; 3] = [
        &[
            "--problem",
            "vc",
            "--param",
            "cluster",
            "--n",
            "9",
            "--count",
            "6",
            "--seed",
            "42",
        ],
        &[
            "--problem",
            "col",
            "--param",
            "cchordal",
            "--n",
            "9",
            "--count",
            "4",
            "--seed",
            "7",
        ],
        &[
            "--problem",
            "vc",
            "--param",
            "fvs",
            "--n",
            "14",
            "--count",
            "4",
            "--seed",
            "3",
            "--weighted",
        ],
    ];
    let mut rows = 0;
    for cfg in configs {
        let with = |workers: &str| {
            let mut args = cfg.to_vec();
            args.extend(["--workers", workers]);
            bench_output(&args)
        };
        let first = with("1")?;
        let second = with("1")?;
        let parallel = with("4")?;
        rows += first.iter().filter(|&&b| b == b'\n').count() - 1;
        t.check(first == second, || format!("{cfg:?}: two runs differ"));
        t.check(first == parallel, || {
            format!("{cfg:?}: 1 vs 4 workers differ")
        });
    }
    t.finish(format!(
        "3 sweeps, {rows} rows, repeated and with 4 workers"
    ))
}

fn main() -> ExitCode {
    type Criterion = fn() -> Result<String, String>;
    let criteria: [(&str, Criterion); 9] = [
        ("feasibility", feasibility),
        ("vertex cover bounds", vc_bounds),
        ("connected vertex cover bound", cvc_bound),
        ("colouring bounds", coloring_bounds),
        ("cochordal tight family", tight_family),
        ("triangle packing", packing),
        ("subroutine contracts", subroutines),
        ("exactness on class", exact_on_class),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
