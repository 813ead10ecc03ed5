use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weighted edge between left vertex `u` and right vertex `v` (0-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub w: u64,
}

/// Bipartite graph `(U, V, E)` with `U = 0..left`, `V = 0..right`.
///
/// When `left == right`, an edge `(i, i)` is a "loop" in the sense of the
/// graph file format, where both sides are numbered `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    left: usize,
    right: usize,
    edges: Vec<Edge>,
}

impl BipartiteGraph {
    pub fn new(left: usize, right: usize, edges: Vec<Edge>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for e in &edges {
            if e.u >= left || e.v >= right {
                return Err(Error::Domain(format!(
                    "edge ({}, {}) outside a {left} x {right} graph",
                    e.u + 1,
                    e.v + 1
                )));
            }
            if !seen.insert((e.u, e.v)) {
                return Err(Error::Domain(format!(
                    "duplicate edge ({}, {})",
                    e.u + 1,
                    e.v + 1
                )));
            }
        }
        Ok(BipartiteGraph { left, right, edges })
    }

    /// `K_{n,n}` with unit weights.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (0..n).map(move |v| Edge { u, v, w: 1 }))
            .collect();
        BipartiteGraph {
            left: n,
            right: n,
            edges,
        }
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Same graph with the sides swapped.
    pub fn transpose(&self) -> BipartiteGraph {
        BipartiteGraph {
            left: self.right,
            right: self.left,
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    u: e.v,
                    v: e.u,
                    w: e.w,
                })
                .collect(),
        }
    }
}

impl fmt::Display for BipartiteGraph {
    /// Graph file format. Only defined for `left == right`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        debug_assert_eq!(self.left, self.right, "graph files have equal sides");
        writeln!(f, "{} {}", self.left.max(self.right), self.edges.len())?;
        for e in &self.edges {
            writeln!(f, "{} {} {}", e.u + 1, e.v + 1, e.w)?;
        }
        Ok(())
    }
}

impl FromStr for BipartiteGraph {
    type Err = Error;

    /// First line `n m`, then `m` lines `u v w` with `1 <= u, v <= n`.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let numbers = |line: usize, text: &str, count: usize| -> Result<Vec<u64>> {
            let v = text
                .split_whitespace()
                .map(|t| t.parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| parse_err(line, format!("bad number: {e}")))?;
            if v.len() != count {
                return Err(parse_err(
                    line,
                    format!("expected {count} numbers, found {}", v.len()),
                ));
            }
            Ok(v)
        };
        let (line, header) = lines
            .next()
            .ok_or_else(|| parse_err(0, "empty graph file".into()))?;
        let hv = numbers(line, header, 2)?;
        let (n, m) = (hv[0] as usize, hv[1] as usize);
        let mut edges = Vec::with_capacity(m);
        for i in 0..m {
            let (line, text) = lines
                .next()
                .ok_or_else(|| parse_err(line, format!("expected {m} edges, found {i}")))?;
            let ev = numbers(line, text, 3)?;
            if ev[0] == 0 || ev[1] == 0 || ev[0] as usize > n || ev[1] as usize > n {
                return Err(parse_err(
                    line,
                    format!("vertex outside 1..={n} in edge `{text}`"),
                ));
            }
            edges.push(Edge {
                u: ev[0] as usize - 1,
                v: ev[1] as usize - 1,
                w: ev[2],
            });
        }
        if let Some((line, _)) = lines.next() {
            return Err(parse_err(line, "trailing data after the last edge".into()));
        }
        BipartiteGraph::new(n, n, edges)
    }
}
