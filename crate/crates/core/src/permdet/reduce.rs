use super::graph::{BipartiteGraph, Edge};
use super::matrix::{IntMatrix, MAX_ENTRY};
use crate::error::{Error, Result};

/// Bipartite graph on `[n] + [n]` whose weighted adjacency is `A` with its
/// diagonal zeroed. A k-permutation of `A` maps to the k-matching formed by
/// its non-fixed pairs `(i, σ(i))`.
///
/// The map is injective but not onto once `k < n`: a matching need not
/// close up into cycles on its moved set, so the matching count can exceed
/// `p-perm(A, k)`. For `A = J_3` and `k = 2` there are 9 two-matchings but
/// only 3 two-permutations. Equality holds at `k = n`.
pub fn pperm_to_matchings(a: &IntMatrix) -> Result<BipartiteGraph> {
    if !a.is_nonnegative() {
        return Err(Error::Domain("matrix has a negative entry".into()));
    }
    let n = a.order();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let w = a.get(u, v);
            if u != v && w != 0 {
                edges.push(Edge { u, v, w: w as u64 });
            }
        }
    }
    BipartiteGraph::new(n, n, edges)
}

/// Order-`2n` matrix of the graph `G'` on `[2n]`: an edge `(i, j)` with
/// `i != j` keeps its place, a loop `(i, i)` moves to `(i, n + i)`, and rows
/// `n+1..2n` stay empty.
///
/// Because those rows are empty, no k-permutation of the result can move a
/// vertex into `n + i`, so loop edges never contribute to `p-perm`.
pub fn matchings_to_pperm(g: &BipartiteGraph) -> Result<IntMatrix> {
    if g.left() != g.right() {
        return Err(Error::Domain(format!(
            "sides differ: {} left, {} right",
            g.left(),
            g.right()
        )));
    }
    let n = g.left();
    let mut a = IntMatrix::zeros(2 * n);
    for e in g.edges() {
        if e.w > MAX_ENTRY as u64 {
            return Err(Error::Domain(format!(
                "edge weight {} exceeds {MAX_ENTRY}",
                e.w
            )));
        }
        let col = if e.u == e.v { n + e.u } else { e.v };
        a.set(e.u, col, e.w as i64);
    }
    Ok(a)
}
