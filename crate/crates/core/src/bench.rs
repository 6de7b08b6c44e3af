//! Seeded sweeps over generated instances, written as CSV.

use std::fmt::Write;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::exec;
use crate::generate::{generate, random_weights, GeneratorSpec, SplitMix64};
use crate::oracle::OracleBudget;
use crate::recognize::ClassTag;
use crate::report::{
    assemble, baseline_vc, oracle_values, solve, BoundFormula, GuaranteeReport, Param, Problem,
};
use crate::weight::{Weight, WeightFn};

pub const CSV_HEADER: &str = "seed,class,n,k_planted,k_oracle,alg,value,opt,bound,pass,micros";

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub problem: Problem,
    pub param: Param,
    pub n: usize,
    pub k_min: usize,
    pub k_max: usize,
    /// Instances per modulator size, with seeds `seed..seed + count`.
    pub count: u64,
    pub seed: u64,
    pub density: f64,
    /// Random rational weights (vertex cover rows other than split).
    pub weighted: bool,
    pub budget: OracleBudget,
    pub workers: usize,
    /// Fill the `micros` column. Off by default so output is reproducible.
    pub timing: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BenchRow {
    pub seed: u64,
    pub class: ClassTag,
    pub n: usize,
    pub k_planted: usize,
    pub report: GuaranteeReport,
}

struct Job {
    seed: u64,
    k: usize,
}

pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    if cfg.weighted && (cfg.problem != Problem::Vc || cfg.param == Param::Split) {
        return Err(Error::Unsupported(format!(
            "weights for {} with parameter {}",
            cfg.problem, cfg.param
        )));
    }
    // fail fast on rows without an algorithm
    solve(
        cfg.problem,
        cfg.param,
        &crate::Graph::empty(1),
        &WeightFn::unit(1),
    )?;
    let jobs: Vec<Job> = (cfg.k_min..=cfg.k_max)
        .flat_map(|k| {
            (0..cfg.count).map(move |i| Job {
                seed: cfg.seed.wrapping_add(i),
                k,
            })
        })
        .filter(|job| job.k <= cfg.n)
        .collect();
    let results = exec::map(&jobs, cfg.workers, |job| run_job(cfg, job));
    let mut rows = Vec::new();
    for r in results {
        rows.extend(r?);
    }
    rows.sort_by(|a, b| {
        (a.seed, a.k_planted, a.report.algorithm).cmp(&(b.seed, b.k_planted, b.report.algorithm))
    });
    Ok(rows)
}

fn run_job(cfg: &BenchConfig, job: &Job) -> Result<Vec<BenchRow>> {
    let class = cfg.param.class();
    let spec = GeneratorSpec {
        class,
        n: cfg.n,
        k: job.k,
        density: cfg.density,
        seed: job.seed,
    };
    let generated = generate(&spec)?;
    let g = &generated.graph;
    let w = if cfg.weighted {
        random_weights(
            g.n(),
            &mut SplitMix64::new(job.seed ^ 0x5EED_5EED_5EED_5EED),
        )
    } else {
        WeightFn::unit(g.n())
    };
    let oracle = match oracle_values(cfg.problem, cfg.param, g, &w, &cfg.budget) {
        Ok(values) => Some(values),
        Err(Error::OverBudget { .. }) => None,
        Err(e) => return Err(e),
    };
    let mut rows = Vec::new();
    let mut push = |sol: crate::report::Solution, formula: BoundFormula, micros: u128| {
        let feasible = sol.is_feasible(g, &w);
        let micros = if cfg.timing { micros } else { 0 };
        rows.push(BenchRow {
            seed: job.seed,
            class,
            n: cfg.n,
            k_planted: job.k,
            report: assemble(
                cfg.problem,
                cfg.param,
                formula,
                &sol,
                feasible,
                oracle.as_ref(),
                micros,
            ),
        });
    };
    let start = Instant::now();
    let sol = solve(cfg.problem, cfg.param, g, &w)?;
    push(
        sol,
        BoundFormula::for_row(cfg.problem, cfg.param),
        start.elapsed().as_micros(),
    );
    if cfg.problem == Problem::Vc {
        let start = Instant::now();
        let base = baseline_vc(g, &w);
        push(base, BoundFormula::TwoOpt, start.elapsed().as_micros());
    }
    Ok(rows)
}

fn cell(w: &Option<Weight>) -> String {
    w.as_ref().map_or_else(String::new, |w| w.to_string())
}

/// CSV with a fixed column order. Without an oracle the `k_oracle`, `opt`
/// and `bound` cells stay empty and `pass` reads `na`.
pub fn write_csv(rows: &[BenchRow], timing: bool) -> String {
    let mut out = String::new();
    writeln!(out, "{CSV_HEADER}").unwrap();
    for row in rows {
        let r = &row.report;
        let pass = match r.pass {
            Some(true) => "true",
            Some(false) => "false",
            None => "na",
        };
        let micros = if timing {
            r.micros.to_string()
        } else {
            String::new()
        };
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{}",
            row.seed,
            row.class,
            row.n,
            row.k_planted,
            cell(&r.k),
            r.algorithm,
            r.value,
            cell(&r.opt),
            cell(&r.bound),
            pass,
            micros
        )
        .unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(workers: usize) -> BenchConfig {
        BenchConfig {
            problem: Problem::Vc,
            param: Param::Cluster,
            n: 9,
            k_min: 0,
            k_max: 3,
            count: 3,
            seed: 1,
            density: 0.5,
            weighted: false,
            budget: OracleBudget::default(),
            workers,
            timing: false,
        }
    }

    #[test]
    fn cluster_sweep_passes() {
        let rows = run_bench(&cfg(1)).unwrap();
        assert_eq!(rows.len(), 4 * 3 * 2);
        assert!(rows.iter().all(|r| r.report.pass == Some(true)));
    }

    #[test]
    fn empty_range_is_header_only() {
        let mut c = cfg(1);
        c.count = 0;
        let rows = run_bench(&c).unwrap();
        assert_eq!(write_csv(&rows, false), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn workers_do_not_change_output() {
        let a = write_csv(&run_bench(&cfg(1)).unwrap(), false);
        let b = write_csv(&run_bench(&cfg(3)).unwrap(), false);
        assert_eq!(a, b);
    }

    #[test]
    fn every_implemented_row_sweeps() {
        let g = crate::Graph::empty(1);
        let w = WeightFn::unit(1);
        let mut swept = 0;
        for problem in [Problem::Vc, Problem::Cvc, Problem::Col, Problem::Tp] {
            for &param in Param::ALL.iter() {
                if solve(problem, param, &g, &w).is_err() {
                    continue;
                }
                let c = BenchConfig {
                    problem,
                    param,
                    n: 8,
                    k_max: 2,
                    count: 2,
                    ..cfg(1)
                };
                let rows = run_bench(&c).unwrap();
                assert!(
                    rows.iter().all(|r| r.report.pass == Some(true)),
                    "{problem} {param}"
                );
                swept += 1;
            }
        }
        assert!(swept >= 12);
    }
}
