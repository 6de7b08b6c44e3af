//! Plain-text instance format.
//!
//! ```text
//! c optional comment
//! p epa <n> <m>
//! v <id> <weight as p/q or integer>
//! e <u> <v>
//! ```
//!
//! Ids are 1-indexed. Vertices without a `v` line have unit weight.

use std::fmt::Write;

use num::{BigInt, One, Zero};

use crate::error::{Error, GraphError, Result};
use crate::graph::Graph;
use crate::weight::{Weight, WeightFn};

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_id(token: Option<&str>, n: usize, line: usize) -> Result<usize> {
    let token = token.ok_or_else(|| err(line, "missing vertex id"))?;
    let id: usize = token
        .parse()
        .map_err(|_| err(line, format!("bad vertex id `{token}`")))?;
    if id == 0 || id > n {
        return Err(err(line, format!("vertex {id} out of range 1..={n}")));
    }
    Ok(id - 1)
}

fn parse_weight(token: &str, line: usize) -> Result<Weight> {
    let bad = || err(line, format!("bad weight `{token}`"));
    let (p, q) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(err(line, "zero denominator"));
    }
    let w = Weight::new(p, q);
    if w < Weight::zero() {
        return Err(err(line, format!("negative weight `{token}`")));
    }
    Ok(w)
}

pub fn parse_instance(text: &str) -> Result<(Graph, WeightFn)> {
    let mut header: Option<(usize, usize)> = None;
    let mut weights: Vec<Option<Weight>> = Vec::new();
    let mut edges = Vec::new();
    let mut edge_lines = Vec::new();
    let mut last = 0;
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last = line;
        let mut tokens = raw.split_whitespace();
        let Some(kind) = tokens.next() else {
            continue;
        };
        match kind {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line, "second header"));
                }
                if tokens.next() != Some("epa") {
                    return Err(err(line, "expected `p epa <n> <m>`"));
                }
                let mut num = |what: &str| -> Result<usize> {
                    let t = tokens
                        .next()
                        .ok_or_else(|| err(line, format!("missing {what}")))?;
                    t.parse()
                        .map_err(|_| err(line, format!("bad {what} `{t}`")))
                };
                let n = num("vertex count")?;
                let m = num("edge count")?;
                header = Some((n, m));
                weights = vec![None; n];
            }
            "v" | "e" => {
                let (n, _) = header.ok_or_else(|| err(line, "record before header"))?;
                if kind == "v" {
                    let v = parse_id(tokens.next(), n, line)?;
                    let t = tokens.next().ok_or_else(|| err(line, "missing weight"))?;
                    if weights[v].is_some() {
                        return Err(err(line, format!("second weight for vertex {}", v + 1)));
                    }
                    weights[v] = Some(parse_weight(t, line)?);
                } else {
                    let u = parse_id(tokens.next(), n, line)?;
                    let v = parse_id(tokens.next(), n, line)?;
                    edges.push((u, v));
                    edge_lines.push(line);
                }
            }
            other => return Err(err(line, format!("unknown record `{other}`"))),
        }
        if let Some(extra) = tokens.next() {
            return Err(err(line, format!("trailing token `{extra}`")));
        }
    }
    let (n, m) = header.ok_or_else(|| err(last.max(1), "missing header"))?;
    if edges.len() != m {
        return Err(err(
            last.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edges(n, edges.iter().copied()).map_err(|e| {
        // point at the offending edge line
        let at = match &e {
            GraphError::SelfLoop(v) => edges.iter().position(|&(a, b)| a == *v && b == *v),
            GraphError::DuplicateEdge(a, b) => edges
                .iter()
                .enumerate()
                .filter(|(_, &(x, y))| (x, y) == (*a, *b) || (y, x) == (*a, *b))
                .map(|(i, _)| i)
                .nth(1),
            _ => None,
        };
        let line = at.map_or(last.max(1), |i| edge_lines[i]);
        err(line, e.to_string())
    })?;
    let w = WeightFn::new(
        weights
            .into_iter()
            .map(|w| w.unwrap_or_else(Weight::one))
            .collect(),
    )?;
    Ok((graph, w))
}

fn format_weight(w: &Weight) -> String {
    if w.is_integer() {
        w.numer().to_string()
    } else {
        format!("{}/{}", w.numer(), w.denom())
    }
}

/// Writes the instance; `v` lines appear only for non-unit weights.
pub fn serialize_instance(g: &Graph, w: &WeightFn, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "c {line}").unwrap();
        }
    }
    writeln!(out, "p epa {} {}", g.n(), g.m()).unwrap();
    for v in 0..g.n() {
        if !w.get(v).is_one() {
            writeln!(out, "v {} {}", v + 1, format_weight(w.get(v))).unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads the ids of a modulator sidecar (one 1-indexed id per line).
pub fn parse_vertex_list(text: &str, n: usize) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        out.push(parse_id(Some(t), n, index + 1)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::ratio;

    #[test]
    fn k2_unit() {
        let (g, w) = parse_instance("p epa 2 1\ne 1 2\n").unwrap();
        assert_eq!(g, Graph::complete(2));
        assert!(w.is_unit());
    }

    #[test]
    fn rational_weight() {
        let (_, w) = parse_instance("c hi\np epa 2 0\nv 1 3/2\n").unwrap();
        assert_eq!(*w.get(0), ratio(3, 2));
        assert_eq!(*w.get(1), Weight::one());
    }

    #[test]
    fn rejects() {
        for (text, line) in [
            ("p epa 2 1\ne 1 1\n", 2),
            ("p epa 2 2\ne 1 2\ne 2 1\n", 3),
            ("p epa 2 1\ne 1 3\n", 2),
            ("p epa 2 0\nv 1 -1\n", 2),
            ("e 1 2\n", 1),
            ("p epa 2 1\n", 1),
            ("p epa 2 0\nx\n", 2),
        ] {
            match parse_instance(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }

    #[test]
    fn round_trip() {
        let g = Graph::petersen();
        let w = WeightFn::new((0..10).map(|i| ratio(i + 1, 3)).collect()).unwrap();
        let text = serialize_instance(&g, &w, Some("petersen"));
        assert_eq!(parse_instance(&text).unwrap(), (g, w));
    }
}
