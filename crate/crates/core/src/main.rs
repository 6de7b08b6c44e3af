use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use epa::bench::{run_bench, write_csv, BenchConfig};
use epa::generate::{generate, modulator_sidecar, GeneratorSpec};
use epa::io::{parse_instance, serialize_instance};
use epa::oracle::{
    exact_chromatic, exact_max_tp, exact_min_cvc, exact_min_modulator, exact_min_wvc, OracleBudget,
};
use epa::recognize::ClassTag;
use epa::report::{solve, verify, Param, Problem};
use epa::{Error, Graph, WeightFn};

#[derive(Parser)]
#[command(
    name = "epa",
    version,
    about = "Modulator-bounded approximation algorithms with oracle checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an algorithm and print its solution.
    Solve(RowArgs),
    /// Run an algorithm and the exact oracles, and check the guarantee.
    Verify(RowArgs),
    /// Sweep generated instances and write a CSV table.
    Bench(BenchArgs),
    /// Generate an instance with a planted modulator.
    Gen(GenArgs),
    /// Print exact optima for an instance.
    Oracle(OracleArgs),
}

#[derive(Args)]
struct RowArgs {
    #[arg(long)]
    problem: Problem,
    #[arg(long)]
    param: Param,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
    /// Largest vertex count any oracle accepts.
    #[arg(long)]
    oracle_budget: Option<usize>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long)]
    problem: Problem,
    #[arg(long)]
    param: Param,
    #[arg(long, default_value_t = 9)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k_min: usize,
    #[arg(long, default_value_t = 3)]
    k_max: usize,
    /// Instances per modulator size.
    #[arg(long, default_value_t = 10)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long)]
    weighted: bool,
    /// Output path; standard output if absent.
    #[arg(long)]
    csv: Option<PathBuf>,
    /// Worker threads, 0 for one per core.
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Record per-row running time in microseconds.
    #[arg(long)]
    timing: bool,
    #[arg(long)]
    oracle_budget: Option<usize>,
}

#[derive(Args)]
struct GenArgs {
    /// Base class, by class name or parameter name.
    #[arg(long, alias = "param")]
    class: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    k: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    /// Instance path; the planted set goes to `<path>.mod`. Standard output
    /// if absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long)]
    problem: Problem,
    /// Also report the minimum modulator for this parameter.
    #[arg(long)]
    param: Option<Param>,
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    oracle_budget: Option<usize>,
}

fn budget(limit: Option<usize>) -> OracleBudget {
    limit.map_or_else(OracleBudget::default, OracleBudget::uniform)
}

fn load(path: &PathBuf) -> Result<(Graph, WeightFn), Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse {
        line: 0,
        message: format!("{}: {e}", path.display()),
    })?;
    parse_instance(&text)
}

fn write_out(path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => fs::write(p, text)
            .map_err(|e| Error::Unsupported(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_class(s: &str) -> Result<ClassTag, Error> {
    s.parse::<ClassTag>()
        .or_else(|_| s.parse::<Param>().map(Param::class))
}

fn one_based(set: &epa::VertexSet) -> Vec<usize> {
    set.iter().map(|v| v + 1).collect()
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Solve(a) => {
            let (g, w) = load(&a.input)?;
            let sol = solve(a.problem, a.param, &g, &w)?;
            let feasible = sol.is_feasible(&g, &w);
            if a.json {
                let record = json!({
                    "problem": a.problem,
                    "param": a.param,
                    "algorithm": sol.trace().algorithm,
                    "depth": sol.trace().depth,
                    "value": sol.value().to_string(),
                    "certificate": sol.certificate(),
                    "feasible": feasible,
                });
                println!("{record}");
            } else {
                println!("value: {}", sol.value());
                println!(
                    "algorithm: {} (depth {})",
                    sol.trace().algorithm,
                    sol.trace().depth
                );
                println!("certificate: {}", sol.certificate());
                println!("feasible: {feasible}");
            }
        }
        Command::Verify(a) => {
            let (g, w) = load(&a.input)?;
            let report = verify(a.problem, a.param, &g, &w, &budget(a.oracle_budget))?;
            if a.json {
                println!(
                    "{}",
                    serde_json::to_string(&report).expect("report serializes")
                );
            } else {
                println!("{report}");
            }
        }
        Command::Bench(a) => {
            let cfg = BenchConfig {
                problem: a.problem,
                param: a.param,
                n: a.n,
                k_min: a.k_min,
                k_max: a.k_max,
                count: a.count,
                seed: a.seed,
                density: a.density,
                weighted: a.weighted,
                budget: budget(a.oracle_budget),
                workers: a.workers,
                timing: a.timing,
            };
            let rows = run_bench(&cfg)?;
            write_out(&a.csv, &write_csv(&rows, a.timing))?;
        }
        Command::Gen(a) => {
            let spec = GeneratorSpec {
                class: parse_class(&a.class)?,
                n: a.n,
                k: a.k,
                density: a.density,
                seed: a.seed,
            };
            let out = generate(&spec)?;
            let comment = format!(
                "{} n={} k={} seed={} density={}",
                spec.class, spec.n, spec.k, spec.seed, spec.density
            );
            let text =
                serialize_instance(&out.graph, &WeightFn::unit(out.graph.n()), Some(&comment));
            match &a.output {
                Some(p) => {
                    write_out(&a.output, &text)?;
                    let mut side = p.clone().into_os_string();
                    side.push(".mod");
                    write_out(&Some(side.into()), &modulator_sidecar(&spec, &out.planted))?;
                }
                None => {
                    print!("{text}");
                    print!(
                        "{}",
                        modulator_sidecar(&spec, &out.planted)
                            .lines()
                            .map(|l| {
                                if l.starts_with('c') {
                                    format!("{l}\n")
                                } else {
                                    format!("c planted {l}\n")
                                }
                            })
                            .collect::<String>()
                    );
                }
            }
        }
        Command::Oracle(a) => {
            let (g, w) = load(&a.input)?;
            let b = budget(a.oracle_budget);
            let (opt, cert, text) = match a.problem {
                Problem::Vc => {
                    let (v, s) = exact_min_wvc(&g, &w, &b)?;
                    (v.to_string(), json!(one_based(&s)), spaced(one_based(&s)))
                }
                Problem::Cvc => {
                    let (v, s) = exact_min_cvc(&g, &b)?;
                    (v.to_string(), json!(one_based(&s)), spaced(one_based(&s)))
                }
                Problem::Col => {
                    let (v, s) = exact_chromatic(&g, &b)?;
                    (v.to_string(), json!(s.color), spaced(s.color))
                }
                Problem::Tp => {
                    let (v, s) = exact_max_tp(&g, &b)?;
                    let tris: Vec<[usize; 3]> =
                        s.triangles.iter().map(|t| t.map(|v| v + 1)).collect();
                    let text = tris
                        .iter()
                        .map(|t| format!("{}-{}-{}", t[0], t[1], t[2]))
                        .collect::<Vec<_>>()
                        .join(" ");
                    (v.to_string(), json!(tris), text)
                }
            };
            let modulator = match a.param {
                Some(p) => {
                    let weights = (a.problem == Problem::Vc && !w.is_unit()).then_some(&w);
                    let (k, m) = exact_min_modulator(&g, p.class(), weights, &b)?;
                    Some((p, k.to_string(), one_based(&m)))
                }
                None => None,
            };
            if a.json {
                let mut record = json!({ "problem": a.problem, "opt": opt, "certificate": cert });
                if let Some((p, k, m)) = &modulator {
                    record["param"] = json!(p);
                    record["k"] = json!(k);
                    record["modulator"] = json!(m);
                }
                println!("{record}");
            } else {
                println!("opt: {opt}");
                println!("certificate: {text}");
                if let Some((p, k, m)) = modulator {
                    println!("modulator ({p}): {k}");
                    println!("modulator certificate: {}", spaced(m));
                }
            }
        }
    }
    Ok(())
}

fn spaced(items: Vec<usize>) -> String {
    items
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Graph(_) => 1,
        Error::OverBudget { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
