//! Dispatch over (problem, parameter) rows and oracle-checked guarantee
//! reports.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num::{One, Zero};
use serde::Serialize;

use crate::check;
use crate::color::{
    color_degeneracy, color_greedy_mis, color_p3k1free, color_with_class_oracle,
    ClassColoringOracle, ColoringSol,
};
use crate::cvc::{cvc_split, ConnectedVCSol};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{
    exact_chromatic, exact_max_tp, exact_min_cvc, exact_min_modulator, exact_min_wvc, OracleBudget,
};
use crate::pack::{tp_3maximal, tp_maximal, TrianglePackingSol};
use crate::recognize::ClassTag;
use crate::solvers::vc_2approx;
use crate::vc::{
    vc_chordal, vc_fvs, vc_local_ratio_ffree, vc_split, FFreeConfig, Trace, VertexCoverSol,
};
use crate::weight::{int, ratio, Weight, WeightFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Vc,
    Cvc,
    Col,
    Tp,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::Vc => "vc",
            Problem::Cvc => "cvc",
            Problem::Col => "col",
            Problem::Tp => "tp",
        }
    }
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Problem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "vc" => Problem::Vc,
            "cvc" => Problem::Cvc,
            "col" => Problem::Col,
            "tp" => Problem::Tp,
            _ => return Err(Error::Unsupported(format!("problem `{s}`"))),
        })
    }
}

/// The modulator parameter, named after the target class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    Cograph,
    Cluster,
    Ccluster,
    Fvs,
    Chordal,
    Split,
    Oct,
    P3k1,
    Cchordal,
}

impl Param {
    pub const ALL: [Param; 9] = [
        Param::Cograph,
        Param::Cluster,
        Param::Ccluster,
        Param::Fvs,
        Param::Chordal,
        Param::Split,
        Param::Oct,
        Param::P3k1,
        Param::Cchordal,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::Cograph => "cograph",
            Param::Cluster => "cluster",
            Param::Ccluster => "ccluster",
            Param::Fvs => "fvs",
            Param::Chordal => "chordal",
            Param::Split => "split",
            Param::Oct => "oct",
            Param::P3k1 => "p3k1",
            Param::Cchordal => "cchordal",
        }
    }

    /// The class that deleting the modulator must reach.
    pub fn class(self) -> ClassTag {
        match self {
            Param::Cograph => ClassTag::Cograph,
            Param::Cluster => ClassTag::Cluster,
            Param::Ccluster => ClassTag::Cocluster,
            Param::Fvs => ClassTag::Forest,
            Param::Chordal => ClassTag::Chordal,
            Param::Split => ClassTag::Split,
            Param::Oct => ClassTag::Bipartite,
            Param::P3k1 => ClassTag::P3k1Free,
            Param::Cchordal => ClassTag::Cochordal,
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = Error;

    /// Accepts the canonical names and the deletion-problem abbreviations
    /// (`cvd`, `ccvd`, `svd`, ...).
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "cograph" | "cgvd" => Param::Cograph,
            "cluster" | "cvd" => Param::Cluster,
            "ccluster" | "cocluster" | "ccvd" => Param::Ccluster,
            "fvs" | "forest" => Param::Fvs,
            "chordal" | "chvd" => Param::Chordal,
            "split" | "svd" => Param::Split,
            "oct" | "bipartite" => Param::Oct,
            "p3k1" | "p3k1-free" => Param::P3k1,
            "cchordal" | "cochordal" => Param::Cchordal,
            _ => return Err(Error::Unsupported(format!("parameter `{s}`"))),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Cover(VertexCoverSol),
    Connected(ConnectedVCSol),
    Coloring(ColoringSol),
    Packing(TrianglePackingSol),
}

impl Solution {
    pub fn value(&self) -> Weight {
        match self {
            Solution::Cover(s) => s.weight.clone(),
            Solution::Connected(s) => int(s.size as i64),
            Solution::Coloring(s) => int(s.colors_used as i64),
            Solution::Packing(s) => int(s.size as i64),
        }
    }

    pub fn trace(&self) -> &Trace {
        match self {
            Solution::Cover(s) => &s.trace,
            Solution::Connected(s) => &s.trace,
            Solution::Coloring(s) => &s.trace,
            Solution::Packing(s) => &s.trace,
        }
    }

    /// Runs the matching independent checker.
    pub fn is_feasible(&self, g: &Graph, w: &WeightFn) -> bool {
        match self {
            Solution::Cover(s) => check::is_cover(g, &s.cover) && w.total(&s.cover) == s.weight,
            Solution::Connected(s) => {
                check::is_connected_cover(g, &s.cover) && s.cover.len() == s.size
            }
            Solution::Coloring(s) => check::is_proper_coloring(g, &s.color, s.colors_used),
            Solution::Packing(s) => {
                check::is_triangle_packing(g, &s.triangles) && s.triangles.len() == s.size
            }
        }
    }

    /// Certificate in external (1-indexed) labels.
    pub fn certificate(&self) -> String {
        let join = |it: &mut dyn Iterator<Item = usize>| {
            it.map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        match self {
            Solution::Cover(s) => join(&mut s.cover.iter()),
            Solution::Connected(s) => join(&mut s.cover.iter()),
            Solution::Coloring(s) => s
                .color
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            Solution::Packing(s) => s
                .triangles
                .iter()
                .map(|t| format!("{}-{}-{}", t[0] + 1, t[1] + 1, t[2] + 1))
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

fn require_unit(w: &WeightFn, what: &str) -> Result<()> {
    if w.is_unit() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("{what} needs unit weights")))
    }
}

/// Runs the algorithm for a row of the table.
pub fn solve(problem: Problem, param: Param, g: &Graph, w: &WeightFn) -> Result<Solution> {
    use Param as P;
    if w.len() != g.n() {
        return Err(crate::GraphError::WeightLength {
            got: w.len(),
            expected: g.n(),
        }
        .into());
    }
    let unsupported = || {
        Err(Error::Unsupported(format!(
            "{problem} with parameter {param}"
        )))
    };
    Ok(match problem {
        Problem::Vc => Solution::Cover(match param {
            P::Cograph => vc_local_ratio_ffree(g, w, &FFreeConfig::cograph()),
            P::Cluster => vc_local_ratio_ffree(g, w, &FFreeConfig::cluster()),
            P::Ccluster => vc_local_ratio_ffree(g, w, &FFreeConfig::cocluster()),
            P::Fvs => vc_fvs(g, w),
            P::Chordal => vc_chordal(g, w),
            P::Split => {
                require_unit(w, "vc with parameter split")?;
                vc_split(g)
            }
            _ => return unsupported(),
        }),
        Problem::Cvc => match param {
            P::Split => {
                require_unit(w, "cvc")?;
                Solution::Connected(cvc_split(g)?)
            }
            _ => return unsupported(),
        },
        Problem::Col => Solution::Coloring(match param {
            P::Oct => color_with_class_oracle(g, &ClassColoringOracle::bipartite()),
            P::Chordal => color_degeneracy(g),
            P::Cograph | P::Cchordal => color_greedy_mis(g),
            P::P3k1 => color_p3k1free(g),
            _ => return unsupported(),
        }),
        Problem::Tp => Solution::Packing(match param {
            P::Cluster => tp_maximal(g),
            P::Ccluster => tp_3maximal(g),
            _ => return unsupported(),
        }),
    })
}

/// The textbook 2-approximation, reported next to each vertex cover row.
pub fn baseline_vc(g: &Graph, w: &WeightFn) -> Solution {
    let cover = vc_2approx(g, w);
    Solution::Cover(VertexCoverSol {
        weight: w.total(&cover),
        cover,
        trace: Trace {
            algorithm: "vc-2approx",
            depth: 0,
        },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    /// value ≤ bound
    Min,
    /// value ≥ bound
    Max,
}

impl Sense {
    pub fn holds(self, value: &Weight, bound: &Weight) -> bool {
        match self {
            Sense::Min => value <= bound,
            Sense::Max => value >= bound,
        }
    }
}

/// The guarantee of a row as a formula over OPT, the modulator value k, and
/// for colouring χ(G−M).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundFormula {
    OptPlusK,
    OptPlusTwoK,
    ThreeHalvesOptPlusK,
    TwoOpt,
    TwoPlusK,
    ChiRestPlusK,
    TwoChiRestPlusKMinusOne,
    OptMinusK,
}

impl BoundFormula {
    pub fn for_row(problem: Problem, param: Param) -> BoundFormula {
        use BoundFormula as B;
        use Param as P;
        match (problem, param) {
            (Problem::Vc, P::Cograph | P::Cluster | P::Ccluster) => B::OptPlusTwoK,
            (Problem::Vc, P::Chordal) => B::ThreeHalvesOptPlusK,
            (Problem::Vc | Problem::Cvc, _) => B::OptPlusK,
            (Problem::Col, P::Oct) => B::TwoPlusK,
            (Problem::Col, P::Cchordal) => B::TwoChiRestPlusKMinusOne,
            (Problem::Col, _) => B::ChiRestPlusK,
            (Problem::Tp, _) => B::OptMinusK,
        }
    }

    pub fn text(self) -> &'static str {
        match self {
            BoundFormula::OptPlusK => "OPT + k",
            BoundFormula::OptPlusTwoK => "OPT + 2k",
            BoundFormula::ThreeHalvesOptPlusK => "3/2 OPT + k",
            BoundFormula::TwoOpt => "2 OPT",
            BoundFormula::TwoPlusK => "2 + k",
            BoundFormula::ChiRestPlusK => "chi(G-M) + k",
            BoundFormula::TwoChiRestPlusKMinusOne => "2 chi(G-M) + k - 1",
            BoundFormula::OptMinusK => "OPT - k",
        }
    }

    pub fn sense(self) -> Sense {
        match self {
            BoundFormula::OptMinusK => Sense::Max,
            _ => Sense::Min,
        }
    }

    fn uses_chi_rest(self) -> bool {
        matches!(
            self,
            BoundFormula::ChiRestPlusK | BoundFormula::TwoChiRestPlusKMinusOne
        )
    }

    pub fn evaluate(self, opt: &Weight, k: &Weight, chi_rest: &Weight) -> Weight {
        match self {
            BoundFormula::OptPlusK => opt + k,
            BoundFormula::OptPlusTwoK => opt + k * int(2),
            BoundFormula::ThreeHalvesOptPlusK => opt * ratio(3, 2) + k,
            BoundFormula::TwoOpt => opt * int(2),
            BoundFormula::TwoPlusK => int(2) + k,
            BoundFormula::ChiRestPlusK => chi_rest + k,
            BoundFormula::TwoChiRestPlusKMinusOne => {
                let b = chi_rest * int(2) + k - Weight::one();
                if b < Weight::zero() {
                    Weight::zero()
                } else {
                    b
                }
            }
            BoundFormula::OptMinusK => opt - k,
        }
    }
}

fn weight_str<S: serde::Serializer>(w: &Weight, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&w.to_string())
}

fn opt_weight_str<S: serde::Serializer>(
    w: &Option<Weight>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match w {
        Some(w) => s.serialize_some(&w.to_string()),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GuaranteeReport {
    pub problem: Problem,
    pub param: Param,
    pub algorithm: &'static str,
    #[serde(serialize_with = "weight_str")]
    pub value: Weight,
    pub feasible: bool,
    #[serde(serialize_with = "opt_weight_str")]
    pub opt: Option<Weight>,
    #[serde(serialize_with = "opt_weight_str")]
    pub k: Option<Weight>,
    #[serde(serialize_with = "opt_weight_str")]
    pub chi_rest: Option<Weight>,
    pub formula: &'static str,
    pub sense: Sense,
    #[serde(serialize_with = "opt_weight_str")]
    pub bound: Option<Weight>,
    pub pass: Option<bool>,
    pub micros: u128,
}

impl GuaranteeReport {
    /// Recomputes the pass flag from the reported numbers alone.
    pub fn recheck(&self) -> Option<bool> {
        let bound = self.bound.as_ref()?;
        Some(self.feasible && self.sense.holds(&self.value, bound))
    }
}

impl fmt::Display for GuaranteeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |w: &Option<Weight>| w.as_ref().map_or("-".to_string(), |w| w.to_string());
        writeln!(f, "problem:   {} / {}", self.problem, self.param)?;
        writeln!(f, "algorithm: {}", self.algorithm)?;
        writeln!(f, "value:     {}", self.value)?;
        writeln!(f, "feasible:  {}", self.feasible)?;
        writeln!(f, "opt:       {}", show(&self.opt))?;
        writeln!(f, "k:         {}", show(&self.k))?;
        if self.chi_rest.is_some() {
            writeln!(f, "chi(G-M):  {}", show(&self.chi_rest))?;
        }
        let cmp = match self.sense {
            Sense::Min => "<=",
            Sense::Max => ">=",
        };
        writeln!(
            f,
            "bound:     value {cmp} {} = {}",
            self.formula,
            show(&self.bound)
        )?;
        let pass = match self.pass {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "n/a",
        };
        write!(f, "result:    {pass}")
    }
}

/// The oracle quantities a bound needs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleValues {
    pub opt: Weight,
    pub k: Weight,
    pub chi_rest: Weight,
}

/// Computes OPT and the minimum modulator value for the row. For weighted
/// vertex cover the modulator is minimised by weight.
pub fn oracle_values(
    problem: Problem,
    param: Param,
    g: &Graph,
    w: &WeightFn,
    budget: &OracleBudget,
) -> Result<OracleValues> {
    let class = param.class();
    let weighted = problem == Problem::Vc && !w.is_unit();
    let (k, modulator) = exact_min_modulator(g, class, weighted.then_some(w), budget)?;
    let opt = match problem {
        Problem::Vc => exact_min_wvc(g, w, budget)?.0,
        Problem::Cvc => int(exact_min_cvc(g, budget)?.0 as i64),
        Problem::Col => int(exact_chromatic(g, budget)?.0 as i64),
        Problem::Tp => int(exact_max_tp(g, budget)?.0 as i64),
    };
    let chi_rest = if BoundFormula::for_row(problem, param).uses_chi_rest() {
        let rest = g.delete(&modulator).graph;
        int(exact_chromatic(&rest, budget)?.0 as i64)
    } else {
        Weight::zero()
    };
    Ok(OracleValues { opt, k, chi_rest })
}

/// Builds a report from a solution and oracle values; the pass flag is
/// computed from the numbers in the report.
pub fn assemble(
    problem: Problem,
    param: Param,
    formula: BoundFormula,
    sol: &Solution,
    feasible: bool,
    oracle: Option<&OracleValues>,
    micros: u128,
) -> GuaranteeReport {
    let bound = oracle.map(|o| formula.evaluate(&o.opt, &o.k, &o.chi_rest));
    let mut report = GuaranteeReport {
        problem,
        param,
        algorithm: sol.trace().algorithm,
        value: sol.value(),
        feasible,
        opt: oracle.map(|o| o.opt.clone()),
        k: oracle.map(|o| o.k.clone()),
        chi_rest: oracle
            .filter(|_| formula.uses_chi_rest())
            .map(|o| o.chi_rest.clone()),
        formula: formula.text(),
        sense: formula.sense(),
        bound,
        pass: None,
        micros,
    };
    report.pass = report.recheck();
    report
}

/// Runs the row's algorithm and the oracles, and checks the guarantee.
pub fn verify(
    problem: Problem,
    param: Param,
    g: &Graph,
    w: &WeightFn,
    budget: &OracleBudget,
) -> Result<GuaranteeReport> {
    let start = Instant::now();
    let sol = solve(problem, param, g, w)?;
    let micros = start.elapsed().as_micros();
    let oracle = oracle_values(problem, param, g, w, budget)?;
    let feasible = sol.is_feasible(g, w);
    Ok(assemble(
        problem,
        param,
        BoundFormula::for_row(problem, param),
        &sol,
        feasible,
        Some(&oracle),
        micros,
    ))
}
