use num_bigint::BigInt;

use super::graph::BipartiteGraph;
use crate::bigacc::{Product, Sum};
use crate::error::{Error, Result};

struct Search<'a> {
    adjacency: &'a [Vec<(usize, u64)>],
    used: Vec<bool>,
    sum: Sum,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn run(&mut self, vertex: usize, remaining: usize, weight: Product) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Error::TooLarge(format!(
                "matching search visited more than {} nodes",
                self.limit
            )));
        }
        if remaining == 0 {
            self.sum.add(weight);
            return Ok(());
        }
        if self.adjacency.len() - vertex < remaining {
            return Ok(());
        }
        // Leave `vertex` unmatched.
        self.run(vertex + 1, remaining, weight.clone())?;
        for &(v, w) in &self.adjacency[vertex] {
            if !self.used[v] {
                self.used[v] = true;
                self.run(vertex + 1, remaining - 1, weight.times(w as i128))?;
                self.used[v] = false;
            }
        }
        Ok(())
    }
}

/// Weighted number of k-matchings: the sum over all sets of `k` pairwise
/// disjoint edges of the product of their weights. Backtracks over the
/// smaller side; `limit` caps the number of search nodes.
pub fn count_k_matchings(g: &BipartiteGraph, k: usize, limit: u64) -> Result<BigInt> {
    let g = if g.left() > g.right() {
        g.transpose()
    } else {
        g.clone()
    };
    if k > g.left() {
        return Ok(BigInt::from(0));
    }
    let mut adjacency = vec![Vec::new(); g.left()];
    for e in g.edges() {
        if e.w != 0 {
            adjacency[e.u].push((e.v, e.w));
        }
    }
    let mut search = Search {
        adjacency: &adjacency,
        used: vec![false; g.right()],
        sum: Sum::default(),
        nodes: 0,
        limit,
    };
    search.run(0, k, Product::one())?;
    Ok(search.sum.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permdet::graph::Edge;
    use crate::DEFAULT_ENUMERATION_LIMIT as LIMIT;

    fn count(g: &BipartiteGraph, k: usize) -> BigInt {
        count_k_matchings(g, k, LIMIT).unwrap()
    }

    /// Subsets of edges of size k that are matchings, enumerated directly.
    fn by_edge_subsets(g: &BipartiteGraph, k: usize) -> BigInt {
        let m = g.edges().len();
        let mut total = BigInt::from(0);
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let chosen: Vec<&Edge> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| &g.edges()[i])
                .collect();
            let disjoint = chosen
                .iter()
                .enumerate()
                .all(|(i, a)| chosen[i + 1..].iter().all(|b| a.u != b.u && a.v != b.v));
            if disjoint {
                total += chosen.iter().map(|e| BigInt::from(e.w)).product::<BigInt>();
            }
        }
        total
    }

    #[test]
    fn complete_two_by_two() {
        let g = BipartiteGraph::complete(2);
        assert_eq!(count(&g, 0), BigInt::from(1));
        assert_eq!(count(&g, 1), BigInt::from(4));
        assert_eq!(count(&g, 2), BigInt::from(2));
        assert_eq!(count(&g, 3), BigInt::from(0));
    }

    #[test]
    fn complete_graph_counts() {
        // C(n,k)^2 k!
        let g = BipartiteGraph::complete(5);
        for (k, want) in [1u64, 25, 200, 600, 600, 120].into_iter().enumerate() {
            assert_eq!(count(&g, k), BigInt::from(want));
        }
    }

    #[test]
    fn weights_and_unbalanced_sides() {
        let edges = vec![
            Edge { u: 0, v: 0, w: 2 },
            Edge { u: 0, v: 3, w: 5 },
            Edge { u: 1, v: 1, w: 3 },
            Edge { u: 1, v: 3, w: 7 },
            Edge { u: 2, v: 2, w: 1 },
            Edge { u: 2, v: 0, w: 4 },
        ];
        let g = BipartiteGraph::new(3, 4, edges).unwrap();
        for k in 0..=4 {
            assert_eq!(count(&g, k), by_edge_subsets(&g, k), "k = {k}");
            assert_eq!(count(&g.transpose(), k), by_edge_subsets(&g, k));
        }
    }

    #[test]
    fn guard() {
        let g = BipartiteGraph::complete(9);
        assert!(matches!(
            count_k_matchings(&g, 5, 1000),
            Err(Error::TooLarge(_))
        ));
    }
}
