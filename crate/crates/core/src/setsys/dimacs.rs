//! DIMACS `.col` reader and writer (`p edge n m`, `e u v`, 1-indexed vertices).

use std::fmt::Write;

use super::graph::Graph;
use crate::error::{Error, Result};

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        let Some(head) = tok.next() else { continue };
        match head {
            "c" => {}
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                let fmt = tok.next().ok_or_else(|| parse_err(line, "missing format"))?;
                if fmt != "edge" && fmt != "col" {
                    return Err(parse_err(line, format!("unsupported format `{fmt}`")));
                }
                let n = number(tok.next(), line)?;
                let _edge_count = number(tok.next(), line)?;
                graph = Some(Graph::empty(n).map_err(|e| parse_err(line, e.to_string()))?);
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = number(tok.next(), line)?;
                let v = number(tok.next(), line)?;
                if u == 0 || v == 0 || u > g.n() || v > g.n() {
                    return Err(parse_err(line, format!("vertex out of range in edge {u} {v}")));
                }
                // duplicate edges are tolerated
                g.add_edge(u - 1, v - 1).map_err(|e| parse_err(line, e.to_string()))?;
            }
            "n" | "x" | "d" | "v" => {}
            other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    graph.ok_or_else(|| parse_err(0, "missing problem line"))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn number(tok: Option<&str>, line: usize) -> Result<usize> {
    let t = tok.ok_or_else(|| parse_err(line, "missing number"))?;
    t.parse()
        .map_err(|_| parse_err(line, format!("`{t}` is not a non-negative integer")))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
