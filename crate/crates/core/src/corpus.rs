//! Reproducible test instances: random small circuits, hand-built circuits
//! that compute the zero polynomial, and random matrices and graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::circuit::{Circuit, CircuitBuilder, GateRef};
use crate::permdet::{BipartiteGraph, Edge, IntMatrix};

/// Shape limits for [`random_circuit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CircuitShape {
    pub max_vars: usize,
    pub max_syntdeg: u64,
    /// Bound on gates created, so also on the pruned circuit size.
    pub max_size: usize,
}

impl Default for CircuitShape {
    fn default() -> Self {
        CircuitShape {
            max_vars: 5,
            max_syntdeg: 3,
            max_size: 25,
        }
    }
}

/// A random circuit within `shape`. The output is the last internal gate
/// created, and gates it does not reach are dropped.
pub fn random_circuit<R: Rng + ?Sized>(shape: CircuitShape, rng: &mut R) -> Circuit {
    assert!(shape.max_vars >= 1 && shape.max_syntdeg >= 1 && shape.max_size >= 3);
    let n = rng.random_range(1..=shape.max_vars);
    let target = rng.random_range(3..=shape.max_size);
    let mut b = CircuitBuilder::new(n);
    let mut pool: Vec<GateRef> = Vec::new();
    let leaf = |b: &mut CircuitBuilder, rng: &mut R| {
        if rng.random_bool(0.8) {
            b.input(rng.random_range(1..=n))
        } else {
            b.constant(rng.random_range(-1..=1))
        }
    };
    for _ in 0..2 {
        let g = leaf(&mut b, rng);
        pool.push(g);
    }
    let mut output = None;
    while b.len() < target {
        if rng.random_bool(0.25) {
            let g = leaf(&mut b, rng);
            pool.push(g);
            continue;
        }
        // Favouring the newest gate keeps most of the circuit reachable.
        let x = if rng.random_bool(0.6) {
            pool[pool.len() - 1]
        } else {
            pool[rng.random_range(0..pool.len())]
        };
        let y = pool[rng.random_range(0..pool.len())];
        let fits = b.degree_of(x) + b.degree_of(y) <= shape.max_syntdeg;
        let g = if fits && rng.random_bool(0.5) {
            b.mul(x, y)
        } else {
            b.add(x, y)
        };
        pool.push(g);
        output = Some(g);
    }
    let output = output.unwrap_or_else(|| b.add(pool[0], pool[1]));
    b.finish(output)
}

/// `count` random circuits drawn from a ChaCha8 stream seeded with `seed`.
pub fn random_circuits(seed: u64, count: usize, shape: CircuitShape) -> Vec<Circuit> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| random_circuit(shape, &mut rng))
        .collect()
}

/// Twenty circuits that compute the zero polynomial without being
/// syntactically trivial, each on at most 5 variables with syntactic
/// degree at most 3.
pub fn zero_circuits() -> Vec<(&'static str, Circuit)> {
    let mut out = Vec::new();
    let mut push = |name, n: usize, build: &dyn Fn(&mut CircuitBuilder) -> GateRef| {
        let mut b = CircuitBuilder::new(n);
        let g = build(&mut b);
        out.push((name, b.finish(g)));
    };
    push("x - x", 1, &|b| {
        let x = b.input(1);
        b.sub(x, x)
    });
    push("xy - yx", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let xy = b.mul(x, y);
        let yx = b.mul(y, x);
        b.sub(xy, yx)
    });
    push("(x+y)^2 expanded", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let s = b.add(x, y);
        let sq = b.mul(s, s);
        let neg = b.constant(-1);
        let nx = b.mul(neg, x);
        let ny = b.mul(neg, y);
        let ntwo = b.add(neg, neg);
        let n2x = b.mul(ntwo, x);
        let t1 = b.mul(nx, x);
        let t2 = b.mul(ny, y);
        let t3 = b.mul(n2x, y);
        let r = b.add(sq, t1);
        let r = b.add(r, t2);
        b.add(r, t3)
    });
    push("0 * x", 1, &|b| {
        let z = b.constant(0);
        let x = b.input(1);
        b.mul(z, x)
    });
    push("0 * (xy + z)", 3, &|b| {
        let (x, y, w) = (b.input(1), b.input(2), b.input(3));
        let xy = b.mul(x, y);
        let s = b.add(xy, w);
        let z = b.constant(0);
        b.mul(z, s)
    });
    push("associativity", 3, &|b| {
        let (x, y, w) = (b.input(1), b.input(2), b.input(3));
        let l = b.add(x, y);
        let l = b.add(l, w);
        let r = b.add(y, w);
        let r = b.add(x, r);
        b.sub(l, r)
    });
    push("distributivity", 3, &|b| {
        let (x, y, w) = (b.input(1), b.input(2), b.input(3));
        let s = b.add(y, w);
        let lhs = b.mul(x, s);
        let neg = b.constant(-1);
        let nx = b.mul(neg, x);
        let t1 = b.mul(nx, y);
        let t2 = b.mul(nx, w);
        let r = b.add(lhs, t1);
        b.add(r, t2)
    });
    push("difference of squares", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let neg = b.constant(-1);
        let ny = b.mul(neg, y);
        let d = b.add(x, ny);
        let s = b.add(x, y);
        let p = b.mul(d, s);
        let nx = b.mul(neg, x);
        let nxx = b.mul(nx, x);
        let yy = b.mul(y, y);
        let r = b.add(p, nxx);
        b.add(r, yy)
    });
    push("1 + (-1)", 1, &|b| {
        let one = b.constant(1);
        let neg = b.constant(-1);
        b.add(one, neg)
    });
    push("x*0 + 0", 3, &|b| {
        let x = b.input(3);
        let z = b.constant(0);
        let p = b.mul(x, z);
        b.add(p, z)
    });
    push("xy + (-y)x", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let xy = b.mul(x, y);
        let neg = b.constant(-1);
        let ny = b.mul(neg, y);
        let nyx = b.mul(ny, x);
        b.add(xy, nyx)
    });
    push("commutativity of +", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let l = b.add(x, y);
        let r = b.add(y, x);
        b.sub(l, r)
    });
    push("x4 * (x5 - x5)", 5, &|b| {
        let (u, v) = (b.input(4), b.input(5));
        let d = b.sub(v, v);
        b.mul(u, d)
    });
    push("(1+x)y - y - xy", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let one = b.constant(1);
        let s = b.add(one, x);
        let p = b.mul(s, y);
        let neg = b.constant(-1);
        let ny = b.mul(neg, y);
        let nx = b.mul(neg, x);
        let nxy = b.mul(nx, y);
        let r = b.add(p, ny);
        b.add(r, nxy)
    });
    push("(x+1)^2 - x^2 - 2x - 1", 1, &|b| {
        let x = b.input(1);
        let one = b.constant(1);
        let neg = b.constant(-1);
        let s = b.add(x, one);
        let sq = b.mul(s, s);
        let nx = b.mul(neg, x);
        let nxx = b.mul(nx, x);
        let ntwo = b.add(neg, neg);
        let n2x = b.mul(ntwo, x);
        let r = b.add(sq, nxx);
        let r = b.add(r, n2x);
        b.add(r, neg)
    });
    push("constant 0", 1, &|b| b.constant(0));
    push("xy * 0", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let xy = b.mul(x, y);
        let z = b.constant(0);
        b.mul(xy, z)
    });
    push("sum reversed", 5, &|b| {
        let xs: Vec<_> = (1..=5).map(|i| b.input(i)).collect();
        let mut l = xs[0];
        for &x in &xs[1..] {
            l = b.add(l, x);
        }
        let mut r = xs[4];
        for &x in xs[..4].iter().rev() {
            r = b.add(r, x);
        }
        b.sub(l, r)
    });
    push("x * (y - y)", 2, &|b| {
        let (x, y) = (b.input(1), b.input(2));
        let d = b.sub(y, y);
        b.mul(x, d)
    });
    push("(x + x) - 2x", 1, &|b| {
        let x = b.input(1);
        let xx = b.add(x, x);
        let one = b.constant(1);
        let two = b.add(one, one);
        let twox = b.mul(two, x);
        b.sub(xx, twox)
    });
    out
}

/// `n x n` matrix with entries uniform in `lo..=hi`.
pub fn random_matrix<R: Rng + ?Sized>(n: usize, lo: i64, hi: i64, rng: &mut R) -> IntMatrix {
    let entries = (0..n * n).map(|_| rng.random_range(lo..=hi)).collect();
    IntMatrix::new(n, entries).expect("entries within range")
}

/// Bipartite graph on `[n] + [n]` keeping each possible edge, loops
/// included, with probability `density`; weights uniform in `1..=max_weight`.
pub fn random_graph<R: Rng + ?Sized>(
    n: usize,
    density: f64,
    max_weight: u64,
    rng: &mut R,
) -> BipartiteGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if rng.random_bool(density) {
                edges.push(Edge {
                    u,
                    v,
                    w: rng.random_range(1..=max_weight),
                });
            }
        }
    }
    BipartiteGraph::new(n, n, edges).expect("edges are distinct and in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::expand_small;
    use crate::field::PrimeField;

    #[test]
    fn zero_circuits_are_zero() {
        let circuits = zero_circuits();
        assert_eq!(circuits.len(), 20);
        let f = PrimeField::new(10_007).unwrap();
        for (name, c) in circuits {
            assert!(c.num_vars() <= 5 && c.syntdeg() <= 3, "{name}");
            let p = expand_small(&c, f, 3, 1000).unwrap();
            assert!(p.is_zero(), "{name}");
        }
    }

    #[test]
    fn random_circuits_respect_shape() {
        let shape = CircuitShape::default();
        let cs = random_circuits(7, 300, shape);
        assert_eq!(cs, random_circuits(7, 300, shape));
        for c in &cs {
            assert!(c.num_vars() <= 5);
            assert!(c.syntdeg() <= 3);
            assert!(c.size() <= 25);
        }
        assert!(cs.iter().any(|c| c.syntdeg() == 3));
        assert!(cs.iter().any(|c| c.size() >= 15));
    }

    #[test]
    fn random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let a = random_matrix(4, -9, 9, &mut rng);
        assert!(a.entries().iter().all(|v| (-9..=9).contains(v)));
        let g = random_graph(4, 0.5, 3, &mut rng);
        assert!(g.edges().iter().all(|e| (1..=3).contains(&e.w)));
    }
}
